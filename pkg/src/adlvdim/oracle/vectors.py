"""Truncated vectors v = sum_i alpha_i e_i in N = L^h, with e_{i+h} = t e_i."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InsufficientPrecision
from .field import GF


@dataclass(frozen=True)
class TruncVector:
    """Coefficients of e_lo, ..., e_{hi-1}; everything from e_hi on is unknown."""

    lo: int
    coeffs: tuple
    field: GF = field(compare=False, repr=False)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if i < self.lo:
            return 0
        if i >= self.hi:
            raise InsufficientPrecision(f"coefficient of e_{i} is beyond e_{self.hi - 1}")
        return self.coeffs[i - self.lo]

    @classmethod
    def basis(cls, i: int, hi: int, F: GF) -> "TruncVector":
        return cls(i, (1,) + (0,) * (hi - i - 1), F)

    @classmethod
    def from_dict(cls, values: dict, lo: int, hi: int, F: GF) -> "TruncVector":
        return cls(lo, tuple(values.get(i, 0) for i in range(lo, hi)), F)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def shift(self, k: int) -> "TruncVector":
        """Index shift by k: multiplication by t^(k/h) when h divides k."""
        return TruncVector(self.lo + k, self.coeffs, self.field)

    def truncate(self, hi: int) -> "TruncVector":
        if hi > self.hi:
            raise InsufficientPrecision(f"cannot extend e_{self.hi - 1} to e_{hi - 1}")
        return TruncVector(self.lo, self.coeffs[: max(0, hi - self.lo)], self.field)

    def scale(self, c: int) -> "TruncVector":
        F = self.field
        return TruncVector(self.lo, tuple(F.mul(c, x) for x in self.coeffs), F)

    def axpy(self, c: int, other: "TruncVector") -> "TruncVector":
        """self + c * other, known up to the smaller precision of the two."""
        F = self.field
        lo, hi = min(self.lo, other.lo), min(self.hi, other.hi)
        out = []
        for i in range(lo, hi):
            x = self.coeffs[i - self.lo] if i >= self.lo else 0
            y = other.coeffs[i - other.lo] if i >= other.lo else 0
            out.append(F.add(x, F.mul(c, y)) if y else x)
        return TruncVector(lo, tuple(out), F)


def iv(v: TruncVector) -> int:
    """Least index with a nonzero coefficient."""
    for i, c in enumerate(v.coeffs):
        if c:
            return v.lo + i
    raise InsufficientPrecision("vector vanishes on its whole known window")


def apply_bsigma(v: TruncVector, m: int) -> TruncVector:
    """sum alpha_i e_i -> sum sigma(alpha_i) e_{i+m}."""
    F = v.field
    return TruncVector(v.lo + m, tuple(F.frob(c) for c in v.coeffs), F)
