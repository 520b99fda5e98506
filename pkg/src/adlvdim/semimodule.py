"""Semi-modules for a coprime slope (m, h), their types, and d(b, mu).

A semi-module ``A`` is a subset of the integers, bounded below, stable under
``+m`` and ``+h``.  It is stored through its generator set ``B = A \\ (h + A)``,
which has exactly one element per residue class mod ``h``; membership is then a
single comparison.

Coweights are plain tuples of integers.  A coweight is *dominant* when its
entries are non-decreasing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InvalidInput, NotASemiModule

NEG_INF = -math.inf

Coweight = tuple


@dataclass(frozen=True)
class SlopeDatum:
    """The coprime pair (m, h); the Newton point is (m/h, ..., m/h)."""

    m: int
    h: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.h, int)):
            raise InvalidInput("m and h must be integers")
        if self.m < 1 or self.h < 1:
            raise InvalidInput("m and h must be positive")
        if math.gcd(self.m, self.h) != 1:
            raise InvalidInput("gcd(m,h) must be 1")

    @property
    def nu(self) -> tuple:
        return (Fraction(self.m, self.h),) * self.h

    def __str__(self):
        return f"{self.m}/{self.h}"


def _prefix_sums(x: Sequence) -> list:
    out, acc = [], 0
    for v in x:
        acc += v
        out.append(acc)
    return out


def preceq(x: Sequence, y: Sequence) -> bool:
    """Dominance order ``x <= y`` for the non-decreasing dominant convention.

    True iff every proper prefix sum of ``y`` is at most the matching prefix
    sum of ``x`` and both totals agree.  Accepts ints or Fractions.
    """
    if len(x) != len(y):
        raise InvalidInput(f"length mismatch: {len(x)} != {len(y)}")
    px = _prefix_sums(Fraction(v) for v in x)
    py = _prefix_sums(Fraction(v) for v in y)
    if not px:
        return True
    if px[-1] != py[-1]:
        return False
    return all(b <= a for a, b in zip(px[:-1], py[:-1]))


def is_dominant(mu: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(mu, mu[1:]))


def dominant(mu: Sequence[int]) -> Coweight:
    return tuple(sorted(mu))


def is_minuscule(mu: Sequence[int]) -> bool:
    if not is_dominant(mu):
        raise InvalidInput(f"coweight {tuple(mu)} is not dominant")
    if any(v < 0 for v in mu):
        raise InvalidInput(f"coweight {tuple(mu)} has negative entries")
    return all(v in (0, 1) for v in mu)


def check_coweight(slope: SlopeDatum, mu: Sequence[int]) -> Coweight:
    """Validate a dominant, nonnegative coweight with total m; return it as a tuple."""
    mu = tuple(mu)
    if len(mu) != slope.h:
        raise InvalidInput(f"mu must have h={slope.h} entries, got {len(mu)}")
    if any(not isinstance(v, int) for v in mu):
        raise InvalidInput("mu entries must be integers")
    if any(v < 0 for v in mu):
        raise InvalidInput("mu entries must be nonnegative")
    if not is_dominant(mu):
        raise InvalidInput(f"mu={mu} is not dominant (entries must be non-decreasing)")
    if sum(mu) != slope.m:
        raise InvalidInput(
            f"sum(mu)={sum(mu)} must equal m={slope.m} (otherwise X_mu(b) is empty)"
        )
    return mu


@dataclass(frozen=True)
class SemiModule:
    """A normalized semi-module, given by its h generators (sorted ascending)."""

    slope: SlopeDatum
    gens: tuple

    def __post_init__(self):
        h, m = self.slope.h, self.slope.m
        gens = tuple(sorted(self.gens))
        object.__setattr__(self, "gens", gens)
        if len(gens) != h:
            raise NotASemiModule(f"expected {h} generators, got {len(gens)}")
        if len({g % h for g in gens}) != h:
            raise NotASemiModule(f"generators {gens} are not pairwise incongruent mod {h}")
        by_res = {g % h: g for g in gens}
        object.__setattr__(self, "_by_residue", by_res)
        for g in gens:
            if g + m < by_res[(g + m) % h]:
                raise NotASemiModule(f"{g}+{m} is not in the set generated by {gens}")
        if sum(gens) != h * (h - 1) // 2:
            raise NotASemiModule(f"generators {gens} are not normalized")

    @property
    def m(self) -> int:
        return self.slope.m

    @property
    def h(self) -> int:
        return self.slope.h

    @property
    def min_gen(self) -> int:
        return self.gens[0]

    @property
    def max_gen(self) -> int:
        return self.gens[-1]

    def gen_of(self, a: int) -> int:
        """The generator in the residue class of ``a``."""
        return self._by_residue[a % self.h]

    def __contains__(self, a: int) -> bool:
        return a >= self._by_residue[a % self.h]

    def elements(self, lo: int, hi: int) -> list:
        """Elements of A in the half-open range [lo, hi)."""
        return [a for a in range(lo, hi) if a in self]


def contains(A: SemiModule, a: int) -> bool:
    return a in A


def normalize(gens: Sequence[int], slope: SlopeDatum) -> SemiModule:
    """Translate a generator set to the unique normalized semi-module."""
    h, m = slope.h, slope.m
    gens = [int(g) for g in gens]
    if len(gens) != h:
        raise NotASemiModule(f"expected {h} generators, got {len(gens)}")
    if len({g % h for g in gens}) != h:
        raise NotASemiModule(f"generators {sorted(gens)} are congruent mod {h}")
    excess = sum(gens) - h * (h - 1) // 2
    # incongruent generators make the excess divisible by h
    shift = -excess // h
    shifted = [g + shift for g in gens]
    by_res = {g % h: g for g in shifted}
    for g in shifted:
        if g + m < by_res[(g + m) % h]:
            raise NotASemiModule(f"not closed under +{m}: {sorted(gens)}")
    return SemiModule(slope, tuple(sorted(shifted)))


def type_of(A: SemiModule) -> Coweight:
    """Read off the type by walking b_i = b_{i-1} + m - mu'_i h from min B."""
    m, h = A.m, A.h
    b = A.min_gen
    entries = []
    for _ in range(h):
        nxt = A.gen_of(b + m)
        entries.append((b + m - nxt) // h)
        b = nxt
    assert b == A.min_gen
    return tuple(entries)


def _prefix_bound(slope: SlopeDatum, i: int) -> int:
    # sum_{j<=i} mu'_j <= i*m/h, strict for 0<i<h by coprimality
    return (i * slope.m) // slope.h


def check_type(mu: Sequence[int], slope: SlopeDatum) -> Coweight:
    mu = tuple(mu)
    if len(mu) != slope.h:
        raise InvalidInput(f"type must have h={slope.h} entries, got {len(mu)}")
    if any(v < 0 for v in mu):
        raise InvalidInput(f"type {mu} has negative entries")
    if sum(mu) != slope.m:
        raise InvalidInput(f"type {mu} has total {sum(mu)}, expected m={slope.m}")
    if not preceq(slope.nu, mu):
        raise InvalidInput(f"type {mu} violates nu <= mu'")
    return mu


def from_type(mu: Sequence[int], slope: SlopeDatum) -> SemiModule:
    """The normalized semi-module of the given type."""
    mu = check_type(mu, slope)
    b, chain = 0, []
    for entry in mu:
        chain.append(b)
        b = b + slope.m - entry * slope.h
    assert b == 0
    return normalize(chain, slope)


def _compositions(slope: SlopeDatum) -> Iterator[tuple]:
    h, m = slope.h, slope.m
    cur = []

    def rec(i, acc):
        if i == h:
            if acc == m:
                yield tuple(cur)
            return
        cap = m - acc if i == h - 1 else _prefix_bound(slope, i + 1) - acc
        lo = m - acc if i == h - 1 else 0
        for v in range(lo, cap + 1):
            cur.append(v)
            yield from rec(i + 1, acc + v)
            cur.pop()

    yield from rec(0, 0)


def enumerate_types(slope: SlopeDatum, mu: Sequence[int]) -> list:
    """All types mu' with nu <= mu' and dominant(mu') <= mu, lexicographically."""
    mu = check_coweight(slope, mu)
    return [t for t in _compositions(slope) if preceq(dominant(t), mu)]


def d_formula(slope: SlopeDatum, mu: Sequence[int]) -> int:
    """d(b, mu) via the double sum over partial sums of nu - mu."""
    mu = check_coweight(slope, mu)
    h = slope.h
    nu = Fraction(slope.m, h)
    total = sum(
        sum(nu - mu[j] for j in range(i)) for i in range(h)
    ) - Fraction(h - 1, 2)
    assert total.denominator == 1
    return int(total)


def lattice_points(slope: SlopeDatum, mu: Sequence[int]) -> list:
    """Integer points strictly between the mu-polygon and the nu-line."""
    mu = check_coweight(slope, mu)
    m, h = slope.m, slope.h
    pts = []
    height = 0
    for x in range(1, h):
        height += mu[x - 1]
        # y < x*m/h; x*m/h is never an integer here
        top = (x * m - 1) // h
        pts.extend((x, y) for y in range(height + 1, top + 1))
    return pts


def d_lattice(slope: SlopeDatum, mu: Sequence[int]) -> int:
    return len(lattice_points(slope, mu))


def phi_max(A: SemiModule, a: int) -> float | int:
    """max{n >= 0 : a + m - n h in A}, or -inf when a is not in A."""
    if a not in A:
        return NEG_INF
    c = a + A.m
    return (c - A.gen_of(c)) // A.h


def conductor(A: SemiModule) -> int:
    """Least F with [F, oo) inside A, i.e. 1 + max of the complement."""
    return max(g - A.h for g in A.gens) + 1
