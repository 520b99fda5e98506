"""Lattices over a finite field realizing the strata, used as an independent oracle."""
from .checks import SampleCheck, check_point, oracle_checks
from .construct import build_lattice, random_point, recover_point, special_point
from .field import GF, get_field
from .lattice import Lattice
from .vectors import TruncVector, apply_bsigma, iv


def a_of(M: Lattice):
    return M.a_of()


def phi_of(M: Lattice, lo: int, hi: int) -> dict:
    return M.phi_values(lo, hi)


def relative_position(M: Lattice) -> tuple:
    return M.relative_position()


def volume(M: Lattice) -> int:
    return M.volume


__all__ = [
    "GF", "Lattice", "SampleCheck", "TruncVector", "a_of", "apply_bsigma", "build_lattice",
    "check_point", "get_field", "iv", "oracle_checks", "phi_of", "random_point",
    "recover_point", "relative_position", "special_point", "volume",
]
