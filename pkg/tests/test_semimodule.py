import itertools
import math
from fractions import Fraction

import pytest

from adlvdim.dimension import dominant_coweights
from adlvdim.errors import InvalidInput, NotASemiModule
from adlvdim.semimodule import (
    NEG_INF,
    SemiModule,
    SlopeDatum,
    check_coweight,
    conductor,
    contains,
    d_formula,
    d_lattice,
    dominant,
    enumerate_types,
    from_type,
    is_minuscule,
    lattice_points,
    normalize,
    phi_max,
    preceq,
    type_of,
)


def nu(slope):
    return (Fraction(slope.m, slope.h),) * slope.h


class TestSlope:
    def test_gcd(self):
        with pytest.raises(InvalidInput, match=r"gcd\(m,h\) must be 1"):
            SlopeDatum(2, 4)

    def test_positive(self):
        with pytest.raises(InvalidInput):
            SlopeDatum(0, 3)
        with pytest.raises(InvalidInput):
            SlopeDatum(3, 0)

    def test_nu(self, s45):
        assert s45.nu == (Fraction(4, 5),) * 5


class TestPreceq:
    def test_nu_below_mu(self, s45):
        assert preceq(nu(s45), (0, 0, 1, 1, 2))

    def test_reflexive(self):
        assert preceq((0, 0, 1, 1, 2), (0, 0, 1, 1, 2))

    def test_orientation(self):
        assert preceq((0, 0, 1, 1, 2), (0, 0, 0, 2, 2))
        assert not preceq((0, 0, 0, 2, 2), (0, 0, 1, 1, 2))

    def test_totals_must_agree(self):
        assert not preceq((0, 1), (0, 2))

    def test_length_mismatch(self):
        with pytest.raises(InvalidInput):
            preceq((0, 1), (0, 0, 1))


def test_dominant():
    assert dominant((0, 0, 1, 2, 1)) == (0, 0, 1, 1, 2)
    assert dominant((0, 0, 0, 2, 2)) == (0, 0, 0, 2, 2)
    assert dominant((2, 0, 1, 0, 1)) == (0, 0, 1, 1, 2)


def test_minuscule():
    assert is_minuscule((0, 1, 1))
    assert not is_minuscule((0, 0, 1, 1, 2))
    assert is_minuscule((0, 0, 0, 0, 0))
    with pytest.raises(InvalidInput):
        is_minuscule((1, 0, 1))


class TestCoweightChecks:
    def test_sum(self, s45):
        with pytest.raises(InvalidInput, match="must equal m"):
            check_coweight(s45, (0, 0, 1, 1, 1))

    def test_dominance_required(self, s45):
        with pytest.raises(InvalidInput, match="not dominant"):
            check_coweight(s45, (0, 0, 1, 2, 1))

    def test_length(self, s45):
        with pytest.raises(InvalidInput):
            check_coweight(s45, (0, 4))


class TestSemiModule:
    def test_membership(self, b1):
        assert contains(b1, 3)
        assert not contains(b1, 1)
        assert not contains(b1, min(b1.gens) - 1)
        assert 3 in b1 and 1 not in b1

    def test_rejects_congruent(self, s45):
        with pytest.raises(NotASemiModule):
            SemiModule(s45, (0, 5, 1, 2, 2))

    def test_rejects_not_closed(self, s23):
        # 0 + 2 = 2 but the class of 2 starts at 5
        with pytest.raises(NotASemiModule):
            normalize((0, 4, 5), s23)

    def test_rejects_unnormalized(self, s23):
        with pytest.raises(NotASemiModule):
            SemiModule(s23, (0, 2, 4))

    def test_normalize(self, s23, s45):
        assert normalize((0, 2, 4), s23).gens == (-1, 1, 3)
        assert normalize((-2, -1, 2, 5, 6), s45).gens == (-2, -1, 2, 5, 6)
        assert normalize((0, 1, 2), s23).gens == (0, 1, 2)

    def test_normalize_idempotent(self, s45):
        A = normalize((3, 4, 7, 10, 11), s45)
        assert normalize(A.gens, s45) == A
        assert sum(A.gens) == 10


class TestTypes:
    def test_type_of(self, b1, s23):
        assert type_of(b1) == (0, 0, 1, 2, 1)
        assert type_of(SemiModule(s23, (0, 1, 2))) == (0, 1, 1)
        assert type_of(SemiModule(s23, (-1, 1, 3))) == (0, 0, 2)

    def test_from_type(self, s45, s23):
        assert from_type((0, 0, 1, 2, 1), s45).gens == (-2, -1, 2, 5, 6)
        assert from_type((0, 1, 1), s23).gens == (0, 1, 2)
        assert from_type((0, 0, 2), s23).gens == (-1, 1, 3)

    def test_from_type_rejects_bad_types(self, s45):
        with pytest.raises(InvalidInput):
            from_type((0, 0, 1, 1, 1), s45)  # wrong total
        with pytest.raises(InvalidInput):
            from_type((1, 0, 1, 1, 1), s45)  # first prefix above nu
        with pytest.raises(InvalidInput):
            from_type((0, 0, 0, -1, 5), s45)

    def test_enumerate_types(self, s23, s45):
        assert enumerate_types(s23, (0, 1, 1)) == [(0, 1, 1)]
        types = enumerate_types(s45, (0, 0, 0, 2, 2))
        assert (0, 0, 0, 2, 2) in types and (0, 0, 1, 2, 1) in types
        assert types == sorted(types)
        for h in range(2, 7):
            assert enumerate_types(SlopeDatum(1, h), (0,) * (h - 1) + (1,)) == [(0,) * (h - 1) + (1,)]

    def test_enumerate_types_brute_force(self):
        # every composition of m with nu <= mu' and dominant(mu') <= mu
        for m, h in [(4, 5), (5, 3), (3, 4), (7, 3)]:
            s = SlopeDatum(m, h)
            for mu in _dominants(m, h):
                brute = [
                    c for c in itertools.product(range(m + 1), repeat=h)
                    if sum(c) == m and preceq(nu(s), c) and preceq(dominant(c), mu)
                ]
                assert enumerate_types(s, mu) == sorted(brute)

    def test_round_trips_exhaustive(self):
        for h in range(1, 7):
            for m in range(1, 14):
                if math.gcd(m, h) != 1:
                    continue
                s = SlopeDatum(m, h)
                # every type lies below the largest coweight (0, ..., 0, m)
                for t in enumerate_types(s, (0,) * (h - 1) + (m,)):
                    A = from_type(t, s)
                    assert type_of(A) == t
                    assert from_type(type_of(A), s) == A


def _dominants(m, h):
    return dominant_coweights(SlopeDatum(m, h))


def test_dominant_coweights_brute_force():
    for m, h in [(4, 5), (5, 3), (7, 2)]:
        brute = [c for c in itertools.product(range(m + 1), repeat=h)
                 if sum(c) == m and list(c) == sorted(c)]
        assert dominant_coweights(SlopeDatum(m, h)) == brute


class TestDimensionFormula:
    def test_examples(self, s45, s23):
        assert d_formula(s45, (0, 0, 1, 1, 2)) == 3
        assert d_formula(s45, (0, 0, 0, 2, 2)) == 4
        assert d_formula(s23, (0, 1, 1)) == 0

    def test_lattice_points(self, s45):
        assert lattice_points(s45, (0, 0, 1, 1, 2)) == [(2, 1), (3, 2), (4, 3)]
        assert lattice_points(s45, (0, 0, 0, 2, 2)) == [(2, 1), (3, 1), (3, 2), (4, 3)]
        for h in range(1, 8):
            assert d_lattice(SlopeDatum(1, h), (0,) * (h - 1) + (1,)) == 0

    def test_formula_equals_count(self):
        for h in range(1, 7):
            for m in range(1, 14):
                if math.gcd(m, h) == 1:
                    for mu in _dominants(m, h):
                        s = SlopeDatum(m, h)
                        assert d_formula(s, mu) == d_lattice(s, mu) >= 0


class TestPhiMaxConductor:
    def test_phi_max(self, b1):
        assert phi_max(b1, -1) == 1
        assert phi_max(b1, 4) == 2
        assert phi_max(b1, 0) == NEG_INF

    def test_conductor_fixture(self, values):
        for row in values["conductor"]:
            A = SemiModule(SlopeDatum(row["m"], row["h"]), tuple(row["B"]))
            assert conductor(A) == row["F"]
            # the direct definition: one more than the largest missing integer
            missing = [a for a in range(min(A.gens) - 1, max(A.gens) + 1) if a not in A]
            assert conductor(A) == max(missing) + 1

    def test_everything_above_conductor(self):
        for s in (SlopeDatum(4, 5), SlopeDatum(7, 4), SlopeDatum(5, 6)):
            for t in enumerate_types(s, _dominants(s.m, s.h)[-1]):
                A = from_type(t, s)
                F = conductor(A)
                assert F - 1 not in A
                assert all(a in A for a in range(F, F + 3 * s.h))
                window = A.elements(min(A.gens), F + 2 * s.h)
                assert all(a + s.m in A and a + s.h in A for a in window)
