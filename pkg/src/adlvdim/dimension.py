"""Dimension of X_mu(b)^0 as the largest stratum, and exhaustive theorem sweeps."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import TheoremViolation
from .extended import (
    ExtendedSemiModule,
    check_axioms,
    check_decomposition,
    enumerate_esm,
    find_decomposition,
    missing_above_min,
    propdim_bijection,
    reduce_to_cyclic,
    v_set,
    v_set_cyclic,
)
from .semimodule import (
    SlopeDatum,
    check_coweight,
    d_formula,
    d_lattice,
    dominant,
    enumerate_types,
    from_type,
    is_minuscule,
    preceq,
    type_of,
)
from .serialize import esm_document


def dominant_coweights(slope: SlopeDatum) -> list:
    """Dominant mu >= 0 with h entries summing to m, lexicographically."""
    h, m = slope.h, slope.m
    out = []

    def rec(prefix, rem):
        if len(prefix) == h - 1:
            if not prefix or rem >= prefix[-1]:
                out.append(tuple(prefix) + (rem,))
            return
        lo = prefix[-1] if prefix else 0
        slots = h - len(prefix)
        for v in range(lo, rem // slots + 1):
            rec(prefix + [v], rem - v)

    rec([], m)
    return sorted(out)


@dataclass
class DimensionReport:
    slope: SlopeDatum
    mu: tuple
    d: int
    esm_count: int
    dim_histogram: dict
    top_strata: list

    def as_dict(self) -> dict:
        return {
            "m": self.slope.m,
            "h": self.slope.h,
            "mu": list(self.mu),
            "nu": f"{self.slope.m}/{self.slope.h}",
            "dim": self.d,
            "d_formula": d_formula(self.slope, self.mu),
            "esm_count": self.esm_count,
            "dim_histogram": {str(k): v for k, v in sorted(self.dim_histogram.items())},
            "top_strata_count": len(self.top_strata),
            "orbit_lower_bound": len(self.top_strata),
            "top_strata": self.top_strata,
        }


def _strata(slope, mu):
    return [(esm, len(v_set(esm))) for esm in enumerate_esm(slope, mu)]


def dimension(slope: SlopeDatum, mu) -> DimensionReport:
    """Compute max |V| over all strata; raises TheoremViolation if it is not d(b, mu)."""
    mu = check_coweight(slope, mu)
    strata = _strata(slope, mu)
    hist = Counter(n for _, n in strata)
    d = max(hist)
    expected = d_formula(slope, mu)
    top = [esm_document(e) for e, n in strata if n == d]
    report = DimensionReport(slope, mu, d, len(strata), dict(hist), top)
    if d != expected or expected != d_lattice(slope, mu):
        raise TheoremViolation(
            f"max|V|={d}, d_formula={expected}, d_lattice={d_lattice(slope, mu)}",
            instance=report,
        )
    return report


def top_strata(slope: SlopeDatum, mu) -> list:
    """All extended semi-modules whose stratum has the full dimension d(b, mu)."""
    mu = check_coweight(slope, mu)
    d = d_formula(slope, mu)
    return [e for e, n in _strata(slope, mu) if n == d]


def reduction_violations(esm: ExtendedSemiModule) -> list:
    """Problems with the chain from ``esm`` down to its cyclic extended semi-module."""
    out = []
    steps = reduce_to_cyclic(esm)
    if steps[0].esm.phi != esm.phi:
        out.append("top of chain differs from phi")
    if not steps[-1].esm.is_cyclic:
        out.append("bottom of chain is not cyclic")
    if dominant(steps[-1].esm.mu) != dominant(type_of(esm.base)):
        out.append(f"endpoint {steps[-1].esm.mu} is not the type {type_of(esm.base)}")
    if tuple(steps[0].esm.mu) != tuple(esm.mu):
        out.append(f"decomposition of phi_n gives {steps[0].esm.mu}, not {esm.mu}")
    for upper, lower in zip(steps, steps[1:]):
        if not check_axioms(upper.esm).ok:
            out.append(f"intermediate at x={upper.point} invalid: {check_axioms(upper.esm)}")
        if upper.replaced != tuple(upper.esm.mu):
            out.append(
                f"x={upper.point}: entry replacement gives {upper.replaced}, "
                f"decomposition gives {upper.esm.mu}"
            )
        lo, hi = dominant(lower.esm.mu), dominant(upper.esm.mu)
        if lo == hi or not preceq(lo, hi):
            out.append(f"x={upper.point}: {lo} is not strictly below {hi}")
    return out


@dataclass
class CellResult:
    slope: SlopeDatum
    mu: tuple
    d: int
    max_v: int
    esm_count: int
    non_cyclic: int
    top_count: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "m": self.slope.m,
            "h": self.slope.h,
            "mu": list(self.mu),
            "d": self.d,
            "max_v": self.max_v,
            "esm_count": self.esm_count,
            "non_cyclic": self.non_cyclic,
            "top_strata": self.top_count,
            "pass": self.passed,
            "violations": list(self.violations),
        }


@dataclass
class VerificationSummary:
    h_max: int
    m_max: int
    cells: list

    @property
    def violations(self) -> int:
        return sum(len(c.violations) for c in self.cells)

    def counts(self) -> dict:
        return {
            "slopes": len({(c.slope.m, c.slope.h) for c in self.cells}),
            "cells": len(self.cells),
            "extended_semimodules": sum(c.esm_count for c in self.cells),
            "non_cyclic": sum(c.non_cyclic for c in self.cells),
        }

    def as_dict(self) -> dict:
        return {
            "h_max": self.h_max,
            "m_max": self.m_max,
            **self.counts(),
            "violations": self.violations,
            "cells": [c.as_dict() for c in self.cells],
        }


def verify_cell(slope: SlopeDatum, mu, chains: bool = True) -> CellResult:
    mu = check_coweight(slope, mu)
    bad = []
    d = d_formula(slope, mu)
    if d_lattice(slope, mu) != d:
        bad.append(f"d_lattice={d_lattice(slope, mu)} != d_formula={d}")
    if d < 0:
        bad.append(f"d_formula={d} is negative")

    types = enumerate_types(slope, mu)
    for t in types:
        A = from_type(t, slope)
        if type_of(A) != t or from_type(type_of(A), slope) != A:
            bad.append(f"type round trip fails for {t}")

    strata = _strata(slope, mu)
    minuscule = is_minuscule(mu)
    non_cyclic = 0
    for esm, n in strata:
        t = type_of(esm.base)
        tag = f"B={esm.base.gens} phi-type={t}"
        rep = check_axioms(esm)
        if not rep.ok:
            bad.append(f"{tag}: {rep}")
        dec = find_decomposition(esm)
        if dec is None or check_decomposition(esm, dec):
            bad.append(f"{tag}: decomposition witness does not re-validate")
        if n > d:
            bad.append(f"{tag}: |V|={n} exceeds d={d}")
        if not preceq(dominant(t), mu):
            bad.append(f"{tag}: dominant type not below mu")
        if dominant(t) == mu and not esm.is_cyclic:
            bad.append(f"{tag}: type is a permutation of mu but phi is not cyclic")
        if esm.is_cyclic:
            if v_set(esm) != v_set_cyclic(esm):
                bad.append(f"{tag}: V differs from the cyclic description")
        else:
            non_cyclic += 1
            if minuscule:
                bad.append(f"{tag}: non-cyclic for minuscule mu")
            if chains:
                bad += [f"{tag}: {p}" for p in reduction_violations(esm)]

    max_v = max((n for _, n in strata), default=-1)
    if max_v != d:
        bad.append(f"max|V|={max_v} != d={d}")
    tops = [e for e, n in strata if n == d]
    if not any(e.is_cyclic and type_of(e.base) == mu for e in tops):
        bad.append("no cyclic top stratum of dominant type mu")
    if len(types) == 1 and types[0] == mu and max_v == 0 and d != 0:
        bad.append("single cyclic point stratum but d != 0")

    A = from_type(mu, slope)
    mapping = propdim_bijection(A)
    image = sorted(mapping.values())
    if len(set(image)) != len(image):
        bad.append("propdim map is not injective")
    if image != missing_above_min(A):
        bad.append(f"propdim image {image} != {missing_above_min(A)}")
    if len(mapping) != d:
        bad.append(f"cyclic stratum of type mu has dimension {len(mapping)} != d={d}")

    return CellResult(slope, mu, d, max_v, len(strata), non_cyclic, len(tops), bad)


def sweep_slopes(h_max: int, m_max: int) -> list:
    return [
        SlopeDatum(m, h)
        for h in range(1, h_max + 1)
        for m in range(1, m_max + 1)
        if math.gcd(m, h) == 1
    ]


def verify_theorems(h_max: int, m_max: int, chains: bool = True) -> VerificationSummary:
    """Check every coprime (m, h) with h <= h_max, m <= m_max and every dominant mu.

    Never raises on a counterexample: each one is recorded in its cell.
    """
    cells = []
    for slope in sweep_slopes(h_max, m_max):
        for mu in dominant_coweights(slope):
            try:
                cells.append(verify_cell(slope, mu, chains=chains))
            except Exception as exc:  # a crash inside a cell is itself a finding
                cells.append(CellResult(slope, mu, d_formula(slope, mu), -1, 0, 0, 0,
                                        [f"error: {exc!r}"]))
    return VerificationSummary(h_max, m_max, cells)
