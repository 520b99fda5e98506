"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """An argument violates a documented precondition."""


class NotASemiModule(InvalidInput):
    """A generator set does not describe a semi-module for the slope."""


class TheoremViolation(AssertionError):
    """A computed quantity contradicts the dimension theorem.

    This is a finding, not a programming error: it carries the offending
    instance so that callers can report it verbatim.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


class InsufficientPrecision(ArithmeticError):
    """A truncated power-series computation ran past its known coefficients."""


class RecoveryError(RuntimeError):
    """A lattice could not be matched to a point of the stratum."""
