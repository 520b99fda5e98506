"""Cross-checks of the combinatorics against lattices built over a finite field."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..errors import RecoveryError
from ..extended import ExtendedSemiModule, enumerate_esm
from ..semimodule import SlopeDatum, check_coweight
from .construct import build_lattice, random_point, recover_point, special_point
from .field import GF


@dataclass
class SampleCheck:
    base: tuple
    kind: str  # "special" or "random"
    x: dict
    a_of: bool
    phi: bool
    volume: int
    relative_position: tuple
    recovered: bool | None
    expected_mu: tuple
    problems: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def as_dict(self) -> dict:
        return {
            "B": list(self.base),
            "kind": self.kind,
            "x": [[a, b, v] for (a, b), v in sorted(self.x.items())],
            "a_of": self.a_of,
            "phi": self.phi,
            "volume": self.volume,
            "relative_position": list(self.relative_position),
            "recovered": self.recovered,
            "pass": self.passed,
            "problems": list(self.problems),
        }


def check_point(esm: ExtendedSemiModule, x: dict, F: GF, precision: int, kind: str,
                recover: bool = True) -> SampleCheck:
    M = build_lattice(esm, x, F, precision)
    A = esm.base
    problems = []
    a_ok = M.B == A.gens
    if not a_ok:
        problems.append(f"A(M) has generators {M.B}")
    vol = M.volume
    if vol != 0:
        problems.append(f"volume {vol}")
    phi = M.phi_values(A.min_gen, esm.window_bound)
    phi_ok = all(phi[a] == esm(a) for a in phi)
    if not phi_ok:
        diff = [(a, phi[a], esm(a)) for a in phi if phi[a] != esm(a)]
        if any(got < want for _, got, want in diff):
            problems.append(f"phi(M) below phi at {diff}")
        else:
            problems.append(f"phi(M) differs from phi at {diff}")
    rel = M.relative_position()
    if rel != tuple(esm.mu):
        problems.append(f"relative position {rel} != {esm.mu}")
    recovered = None
    if recover:
        try:
            recovered = recover_point(esm, M, F, precision) == x
        except RecoveryError as exc:
            recovered = False
            problems.append(f"recovery failed: {exc}")
        else:
            if not recovered:
                problems.append("recovered point differs")
    return SampleCheck(A.gens, kind, dict(x), a_ok, phi_ok, vol, rel, recovered,
                       tuple(esm.mu), problems)


def oracle_checks(slope: SlopeDatum, mu, F: GF, precision: int = 30, samples: int = 100,
                  seed: int = 0) -> list:
    """Special point of every stratum for mu, plus seeded random points on each cyclic one."""
    mu = check_coweight(slope, mu)
    rng = random.Random(seed)
    out = []
    for esm in enumerate_esm(slope, mu):
        out.append(check_point(esm, special_point(esm), F, precision, "special"))
        if esm.is_cyclic:
            for _ in range(samples):
                out.append(check_point(esm, random_point(esm, F, rng), F, precision, "random"))
    return out
