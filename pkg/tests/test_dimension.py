import pytest

from adlvdim.dimension import (
    dimension,
    dominant_coweights,
    sweep_slopes,
    top_strata,
    verify_cell,
    verify_theorems,
)
from adlvdim.errors import InvalidInput
from adlvdim.extended import cyclic_of, v_set
from adlvdim.semimodule import SlopeDatum, enumerate_types, from_type, type_of


@pytest.mark.parametrize("mu,d", [((0, 0, 1, 1, 2), 3), ((0, 0, 0, 2, 2), 4)])
def test_dimension_examples(s45, mu, d):
    rep = dimension(s45, mu)
    assert rep.d == d
    assert sum(rep.dim_histogram.values()) == rep.esm_count
    assert rep.as_dict()["dim"] == d == rep.as_dict()["d_formula"]


def test_point_case(s23):
    rep = dimension(s23, (0, 1, 1))
    assert (rep.d, rep.esm_count) == (0, 1)
    assert len(top_strata(s23, (0, 1, 1))) == 1


def test_empty_variety_reported(s45):
    with pytest.raises(InvalidInput, match="must equal m"):
        dimension(s45, (0, 0, 1, 1, 1))


def test_deterministic(s45):
    a = dimension(s45, (0, 0, 0, 2, 2)).as_dict()
    b = dimension(s45, (0, 0, 0, 2, 2)).as_dict()
    assert a == b


def test_top_strata_census(s45, values):
    # the census that was computed for these two cases, recorded in the fixture
    for row in values["top_strata_census"]:
        tops = top_strata(SlopeDatum(row["m"], row["h"]), tuple(row["mu"]))
        assert len(tops) == row["count"]
        assert sorted(list(type_of(e.base)) for e in tops) == row["types"]
        assert all(len(v_set(e)) == dimension(s45, tuple(row["mu"])).d for e in tops)


def test_top_strata_contain_prop_witness():
    for s in (SlopeDatum(4, 5), SlopeDatum(7, 4), SlopeDatum(5, 6)):
        for mu in dominant_coweights(s):
            assert cyclic_of(from_type(mu, s)) in top_strata(s, mu)


def test_extra_top_stratum(s45):
    # the third maximiser for (0,0,1,1,2): cyclic on the type (0,0,2,1,1)
    tops = top_strata(s45, (0, 0, 1, 1, 2))
    third = [e for e in tops if type_of(e.base) == (0, 0, 2, 1, 1)]
    assert len(third) == 1 and third[0].is_cyclic
    assert third[0].base.gens == (-1, 0, 1, 3, 7)
    assert v_set(third[0]) == [(0, 3), (1, 3), (7, 8)]


@pytest.mark.parametrize("h_max,m_max", [(5, 4), (3, 2), (1, 1)])
def test_verify_small(h_max, m_max):
    summary = verify_theorems(h_max, m_max)
    assert summary.violations == 0
    assert all(c.passed for c in summary.cells)


def test_verify_includes_examples():
    cells = verify_theorems(5, 4).cells
    keys = {(c.slope.m, c.slope.h, c.mu) for c in cells}
    assert (4, 5, (0, 0, 1, 1, 2)) in keys and (4, 5, (0, 0, 0, 2, 2)) in keys


def test_verify_32_types():
    s = SlopeDatum(2, 3)
    assert len({t for mu in dominant_coweights(s) for t in enumerate_types(s, mu)}) == 2
    assert [c.d for c in verify_theorems(3, 2).cells if c.slope == s] == [1, 0]


def test_rank_one():
    summary = verify_theorems(1, 1)
    (cell,) = summary.cells
    assert (cell.d, cell.esm_count) == (0, 1)


def test_sweep_order():
    slopes = sweep_slopes(4, 5)
    assert slopes == sorted(slopes, key=lambda s: (s.h, s.m))
    assert all(__import__("math").gcd(s.m, s.h) == 1 for s in slopes)


def test_cell_records_instead_of_raising():
    cell = verify_cell(SlopeDatum(4, 5), (0, 0, 0, 2, 2))
    d = cell.as_dict()
    assert d["pass"] and d["violations"] == [] and d["d"] == 4 == d["max_v"]


def test_counts_shape():
    counts = verify_theorems(3, 5).counts()
    assert set(counts) == {"slopes", "cells", "extended_semimodules", "non_cyclic"}
