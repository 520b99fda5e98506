import random

import pytest

from adlvdim.errors import InsufficientPrecision, InvalidInput, RecoveryError
from adlvdim.extended import cyclic_of, enumerate_esm, v_set
from adlvdim.oracle import (
    GF,
    Lattice,
    TruncVector,
    a_of,
    apply_bsigma,
    build_lattice,
    check_point,
    get_field,
    iv,
    oracle_checks,
    phi_of,
    random_point,
    recover_point,
    relative_position,
    special_point,
    volume,
)
from adlvdim.oracle.lattice import nullspace
from adlvdim.semimodule import SlopeDatum, from_type

F16 = get_field(2, 4)
F9 = get_field(3, 2)


def rank_route_position(M: Lattice, K: int) -> tuple:
    """Relative position from ranks, without Smith reduction.

    In M / t^k M (basis t^j w_b, j < k) the image of b sigma M has dimension
    sum_i max(0, k - mu_i), so the mu_i are read off from the rank jumps.
    """
    h, fld = M.slope.h, M.field
    ranks = [0]
    for k in range(1, K + 1):
        cols = []
        for b in M.B:
            image = M._bsigma(M.echelon_vector(b))
            for j in range(k):
                c = M.coordinates({i + j * h: v for i, v in image.items()}, k)
                cols.append([x for row in c for x in row])
        # the span over k of these vectors is the image, since b sigma is sigma-linear
        ranks.append(len(cols) - len(nullspace(fld, cols, len(cols))))
    # rank_k - rank_{k-1} = #{i : mu_i < k}
    below = [ranks[k] - ranks[k - 1] for k in range(1, K + 1)]
    mu = []
    for k in range(K):
        mu += [k] * (below[k] - (below[k - 1] if k else 0))
    return tuple(sorted(mu))


class TestField:
    @pytest.mark.parametrize("p,n", [(2, 4), (3, 2), (2, 1), (5, 1)])
    def test_axioms(self, p, n):
        F = GF(p, n)
        els = list(F.elements())
        assert len(els) == p ** n
        for x in els:
            assert F.add(x, F.neg(x)) == 0 and F.mul(x, 1) == x
            if x:
                assert F.mul(x, F.inv(x)) == 1
            assert F.frob_inv(F.frob(x)) == x
        for x in els:
            for y in els[:7]:
                assert F.frob(F.mul(x, y)) == F.mul(F.frob(x), F.frob(y))
                assert F.frob(F.add(x, y)) == F.add(F.frob(x), F.frob(y))

    def test_fixed_field(self):
        assert sum(F16.is_in_base_field(x) for x in F16.elements()) == 2
        assert sum(F9.is_in_base_field(x) for x in F9.elements()) == 3

    def test_invalid(self):
        with pytest.raises(InvalidInput):
            GF(4, 1)
        with pytest.raises(ZeroDivisionError):
            F16.inv(0)


class TestVectors:
    def test_iv(self):
        assert iv(TruncVector.basis(3, 20, F16)) == 3
        v = TruncVector.from_dict({3: 1, 7: 5}, 0, 20, F16)
        assert iv(v) == 3
        assert iv(TruncVector.basis(2, 20, F16).shift(5)) == 7

    def test_bsigma(self):
        v = TruncVector.from_dict({0: 2, 3: 1}, 0, 10, F16)
        w = apply_bsigma(v, 4)
        assert iv(w) == 4 and w[4] == F16.frob(2) and w[7] == 1

    def test_precision_guard(self):
        v = TruncVector.basis(0, 5, F16)
        with pytest.raises(InsufficientPrecision):
            v[5]
        with pytest.raises(InsufficientPrecision):
            iv(TruncVector(0, (0, 0), F16))


class TestStandardLattice:
    def test_invariants(self, s45, values):
        M0 = Lattice.standard(s45, F16)
        assert a_of(M0).gens == (0, 1, 2, 3, 4)
        assert volume(M0) == 0
        assert relative_position(M0) == tuple(values["standard_lattice_relative_position"]["inv"])
        assert rank_route_position(M0, 4) == relative_position(M0)
        assert volume(Lattice.standard(s45, F16, shift=1)) == 5

    def test_phi(self, s45):
        M0 = Lattice.standard(s45, F16)
        # t^-n e_{a+4} lies in M0 exactly when a + 4 - 5n >= 0
        assert phi_of(M0, 0, 5) == {a: (a + 4) // 5 for a in range(5)}


@pytest.fixture
def ex34(ex_noncyclic):
    return ex_noncyclic


class TestConstruction:
    def test_special_point_example(self, ex34):
        x = special_point(ex34)
        assert x[(4, 6)] == 1 and sum(x.values()) == 1
        assert set(x) == set(v_set(ex34))
        M = build_lattice(ex34, x, F16)
        assert M.B == (-2, -1, 2, 5, 6)
        phi = M.phi_values(-2, ex34.window_bound)
        assert phi[-1] == 0 and all(phi[a] == ex34(a) for a in phi)
        assert M.relative_position() == (0, 0, 0, 2, 2)
        assert rank_route_position(M, 5) == (0, 0, 0, 2, 2)
        assert recover_point(ex34, M, F16) == x

    def test_zero_point_of_cyclic(self, ex_cyclic):
        x = special_point(ex_cyclic)
        assert set(x.values()) <= {0}
        M = build_lattice(ex_cyclic, x, F16)
        assert a_of(M) == ex_cyclic.base
        assert recover_point(ex_cyclic, M, F16) == x

    def test_random_points_cyclic(self, ex_cyclic):
        rng = random.Random(7)
        for _ in range(10):
            x = random_point(ex_cyclic, F16, rng)
            M = build_lattice(ex_cyclic, x, F16)
            assert M.volume == 0 and M.B == ex_cyclic.base.gens
            assert M.relative_position() == (0, 0, 1, 1, 2)
            assert recover_point(ex_cyclic, M, F16) == x
        assert rank_route_position(M, 5) == (0, 0, 1, 1, 2)

    def test_phi_lower_bound_random_noncyclic(self, ex34):
        # off the open subset phi(M) may exceed phi, but never drops below it
        rng = random.Random(3)
        for _ in range(10):
            M = build_lattice(ex34, random_point(ex34, F16, rng), F16)
            phi = M.phi_values(-2, ex34.window_bound)
            assert all(phi[a] >= ex34(a) for a in phi)

    def test_other_field(self, s45):
        rng = random.Random(1)
        for mu in [(0, 0, 0, 2, 2), (0, 0, 1, 1, 2)]:
            for esm in enumerate_esm(s45, mu):
                x = special_point(esm) if not esm.is_cyclic else random_point(esm, F9, rng)
                M = build_lattice(esm, x, F9)
                assert M.relative_position() == mu
                assert recover_point(esm, M, F9) == x

    def test_wrong_point_rejected(self, ex_cyclic):
        with pytest.raises(InvalidInput):
            build_lattice(ex_cyclic, {(0, 1): 1}, F16)

    def test_recover_wrong_stratum(self, s45, ex_cyclic):
        other = cyclic_of(from_type((0, 0, 1, 1, 2), s45))
        M = build_lattice(other, special_point(other), F16)
        with pytest.raises(RecoveryError):
            recover_point(ex_cyclic, M, F16)

    def test_precision_too_small(self, ex_cyclic):
        M = build_lattice(ex_cyclic, special_point(ex_cyclic), F16, precision=8)
        with pytest.raises(InsufficientPrecision):
            M.relative_position()


class TestChecks:
    def test_small_run(self, s45):
        results = oracle_checks(s45, (0, 0, 0, 2, 2), F16, samples=3, seed=0)
        assert results and all(r.passed for r in results)
        assert {r.kind for r in results} == {"special", "random"}
        assert all(r.as_dict()["pass"] for r in results)

    def test_seeded(self, s45):
        a = [r.as_dict() for r in oracle_checks(s45, (0, 0, 1, 1, 2), F16, samples=2, seed=5)]
        b = [r.as_dict() for r in oracle_checks(s45, (0, 0, 1, 1, 2), F16, samples=2, seed=5)]
        assert a == b

    def test_precision_doubling(self, ex34):
        x = special_point(ex34)
        assert check_point(ex34, x, F16, 30, "special").as_dict() == \
            check_point(ex34, x, F16, 60, "special").as_dict()

    @pytest.mark.parametrize("m,h", [(3, 4), (7, 3), (5, 3), (3, 5)])
    def test_other_slopes(self, m, h):
        from adlvdim.dimension import dominant_coweights
        s = SlopeDatum(m, h)
        for mu in dominant_coweights(s):
            assert all(r.passed for r in oracle_checks(s, mu, F16, samples=2, seed=1))
