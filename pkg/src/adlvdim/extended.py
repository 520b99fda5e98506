"""Extended semi-modules (A, phi) and the pair sets V(A, phi).

``phi`` is stored explicitly on ``A`` intersected with a finite window
``[min B, window_bound)``; beyond the window it equals :func:`phi_max`, which
is forced once every larger integer lies in ``A``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .errors import InvalidInput
from .semimodule import (
    NEG_INF,
    Coweight,
    SemiModule,
    SlopeDatum,
    check_coweight,
    conductor,
    dominant,
    enumerate_types,
    from_type,
    phi_max,
    preceq,
    type_of,
)


def required_window(A: SemiModule, values: Mapping[int, int]) -> int:
    """Window bound F + h*(Phi + 2), Phi the largest value on [min B, F + h)."""
    F = conductor(A)
    top = [values.get(a, phi_max(A, a)) for a in A.elements(A.min_gen, F + A.h)]
    return F + A.h * (max(top) + 2)


@dataclass(frozen=True)
class ExtendedSemiModule:
    base: SemiModule
    mu: Coweight
    phi: Mapping[int, int]
    window_bound: int

    @classmethod
    def from_values(cls, base: SemiModule, values: Mapping[int, int], mu: Sequence[int]):
        """Build from the non-forced values; every other a in A gets phi_max(a)."""
        values = {int(a): int(v) for a, v in values.items()}
        bound = required_window(base, values)
        phi = {a: values.get(a, phi_max(base, a)) for a in base.elements(base.min_gen, bound)}
        return cls(base, tuple(mu), phi, bound)

    @property
    def slope(self) -> SlopeDatum:
        return self.base.slope

    def __call__(self, a: int):
        """phi(a), with -inf off A."""
        if a not in self.base:
            return NEG_INF
        if a < self.window_bound:
            return self.phi[a]
        return phi_max(self.base, a)

    @property
    def is_cyclic(self) -> bool:
        return all(v == phi_max(self.base, a) for a, v in self.phi.items())

    def excess_points(self) -> list:
        """The finite set {a in A : phi(a+h) > phi(a) + 1}, ascending."""
        h = self.base.h
        return [a for a in sorted(self.phi) if self(a + h) > self.phi[a] + 1]

    def sort_key(self):
        return (type_of(self.base), tuple(self.phi[a] for a in sorted(self.phi)))


@dataclass(frozen=True)
class Decomposition:
    """Chains through A: ``successor`` on A inside the window, plus the h starts."""

    successor: Mapping[int, int]
    starts: tuple

    @property
    def start_values(self) -> Coweight:
        return tuple(sorted(v for _, v in self.starts))

    def chain(self, start: int, length: int) -> list:
        out, a = [start], start
        while len(out) < length and a in self.successor:
            a = self.successor[a]
            out.append(a)
        return out


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, message: str):
        self.violations.append((condition, message))

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(f"({c}) {msg}" for c, msg in self.violations)


def cyclic_of(A: SemiModule) -> ExtendedSemiModule:
    return ExtendedSemiModule.from_values(A, {}, dominant(type_of(A)))


def _match_level(sources, slots, h):
    """Assign each source a > to a distinct slot a' > a + h; None if impossible.

    Neighbourhoods are nested (larger a sees fewer slots), so serving sources
    from the largest down and taking the smallest admissible free slot is exact.
    """
    free = sorted(slots)
    out = {}
    for a in sorted(sources, reverse=True):
        pick = next((s for s in free if s > a + h), None)
        if pick is None:
            return None
        free.remove(pick)
        out[a] = pick
    return out


def find_decomposition(esm: ExtendedSemiModule, mu: Sequence[int] | None = None):
    """A decomposition witness for condition (4), or None.

    Edges a -> a+h are forced wherever phi grows by exactly one.  The
    remaining sources D = {phi(a+h) > phi(a)+1} are matched, one phi-level at a
    time, into the slots C = B u (D + h) that nothing is forced into.  Unmatched
    slots are the chain starts; their phi-values must give ``mu``
    (``esm.mu`` by default).
    """
    target = tuple(esm.mu if mu is None else mu)
    A, h = esm.base, esm.base.h
    D = esm.excess_points()
    slots = list(A.gens) + [a + h for a in D]
    src_by_level, slot_by_level = defaultdict(list), defaultdict(list)
    for a in D:
        src_by_level[esm(a)].append(a)
    for s in slots:
        slot_by_level[esm(s)].append(s)
    jumps = {}
    for level, sources in src_by_level.items():
        got = _match_level(sources, slot_by_level.get(level + 1, []), h)
        if got is None:
            return None
        jumps.update(got)
    taken = set(jumps.values())
    starts = tuple(sorted((s, esm(s)) for s in slots if s not in taken))
    if tuple(sorted(v for _, v in starts)) != target:
        return None
    succ = {a: jumps.get(a, a + h) for a in esm.phi}
    return Decomposition(succ, starts)


def check_decomposition(esm: ExtendedSemiModule, dec: Decomposition) -> list:
    """Re-validate a witness; returns a list of problems (empty if valid)."""
    problems = []
    h = esm.base.h
    preds = Counter()
    for a, s in dec.successor.items():
        if s not in esm.base:
            problems.append(f"successor {s} of {a} not in A")
            continue
        if esm(s) != esm(a) + 1:
            problems.append(f"phi({s}) != phi({a})+1")
        if esm(a + h) == esm(a) + 1:
            if s != a + h:
                problems.append(f"successor of {a} must be {a + h}")
        elif s <= a + h:
            problems.append(f"successor of {a} must exceed {a + h}")
        preds[s] += 1
    problems += [f"{s} has {n} predecessors" for s, n in preds.items() if n > 1]
    start_set = {a for a, _ in dec.starts}
    if len(start_set) != h:
        problems.append(f"expected {h} chain starts, got {len(start_set)}")
    for a in esm.phi:
        if (a in start_set) == (preds[a] > 0):
            problems.append(f"{a} must be either a start or a successor")
    if any(esm(a) != v for a, v in dec.starts):
        problems.append("start values disagree with phi")
    if dec.start_values != tuple(esm.mu):
        problems.append(f"start values {dec.start_values} != mu {tuple(esm.mu)}")
    return problems


def check_axioms(esm: ExtendedSemiModule) -> AxiomReport:
    rep = AxiomReport()
    A, h = esm.base, esm.base.h
    try:
        check_coweight(A.slope, esm.mu)
    except InvalidInput as exc:
        rep.add("mu", str(exc))
    window = A.elements(A.min_gen, esm.window_bound)
    if set(esm.phi) != set(window):
        rep.add("1", "phi must be defined exactly on A inside the window")
        return rep
    if any((not isinstance(v, int)) or v < 0 for v in esm.phi.values()):
        rep.add("1", "phi values on A must be nonnegative integers")
        return rep
    F = conductor(A)
    if esm.window_bound < required_window(A, esm.phi):
        rep.add("window", f"window bound {esm.window_bound} too small")
    for a in window:
        if esm(a + h) < esm(a) + 1:
            rep.add("2", f"phi({a + h})={esm(a + h)} < phi({a})+1")
    for a in window:
        cap = phi_max(A, a)
        if esm.phi[a] > cap:
            rep.add("3", f"phi({a})={esm.phi[a]} exceeds {cap}")
        elif a >= F and esm.phi[a] != cap:
            rep.add("3", f"phi({a}) must equal {cap} beyond the conductor {F}")
    if rep.ok and find_decomposition(esm) is None:
        rep.add("4", f"no decomposition with start values {tuple(esm.mu)}")
    return rep


def _phi_search(A: SemiModule) -> list:
    """All phi on A satisfying (1)-(3) whose condition-(4) matching exists.

    Positions below the conductor are filled in descending order.  A source a
    (phi(a+h) > phi(a)+1) only ever needs a slot above a+h, and every such
    slot is already known when a is reached; later sources see a superset of
    slots, so taking any admissible free slot never loses a solution.
    Returns (values, start multiset) pairs.
    """
    h, F = A.h, conductor(A)
    positions = A.elements(A.min_gen, F)
    below = {}
    for a in positions:
        below[a] = below.get(a - h, -1) + 1
    gens = set(A.gens)
    phi = {}
    free = defaultdict(list)
    for g in A.gens:
        if g >= F:
            free[phi_max(A, g)].append(g)
    order = list(reversed(positions))
    out = []

    def value(a):
        return phi[a] if a < F else phi_max(A, a)

    def rec(i):
        if i == len(order):
            starts = sorted(v for v, slots in free.items() for _ in slots)
            out.append((dict(phi), tuple(starts)))
            return
        a = order[i]
        up = value(a + h) - 1
        for v in range(below[a], up + 1):
            phi[a] = v
            undo = []
            ok = True
            if a in gens:
                free[v].append(a)
                undo.append(("add", v, a))
            if v < up:
                lvl = value(a + h)
                free[lvl].append(a + h)
                undo.append(("add", lvl, a + h))
                pool = free.get(v + 1, [])
                pick = next((s for s in pool if s > a + h), None)
                if pick is None:
                    ok = False
                else:
                    pool.remove(pick)
                    undo.append(("take", v + 1, pick))
            if ok:
                rec(i + 1)
            for kind, lvl, s in reversed(undo):
                if kind == "add":
                    free[lvl].remove(s)
                else:
                    free[lvl].append(s)
            del phi[a]

    rec(0)
    return out


@lru_cache(maxsize=4096)
def _phis_by_mu(A: SemiModule) -> dict:
    table = defaultdict(list)
    for values, starts in _phi_search(A):
        table[starts].append(values)
    return dict(table)


def enumerate_for_base(A: SemiModule, mu: Sequence[int]) -> list:
    """All extended semi-modules (A, phi) for ``mu`` on a fixed base A."""
    mu = tuple(mu)
    found = [
        ExtendedSemiModule.from_values(A, values, mu)
        for values in _phis_by_mu(A).get(mu, [])
    ]
    found.sort(key=ExtendedSemiModule.sort_key)
    return found


def candidate_count(A: SemiModule) -> int:
    """Number of phi candidates tried by :func:`enumerate_for_base`."""
    h, F = A.h, conductor(A)
    total = 1
    for g in A.gens:
        k = len(range(g, F, h)) if g < F else 0
        total *= comb(k + phi_max(A, g), k)
    return total


def enumerate_esm(slope: SlopeDatum, mu: Sequence[int]) -> list:
    """Every extended semi-module for ``mu``: by type, then by phi on the window."""
    mu = check_coweight(slope, mu)
    out = []
    for t in enumerate_types(slope, mu):
        out.extend(enumerate_for_base(from_type(t, slope), mu))
    return out


def _search_bound(esm: ExtendedSemiModule) -> int:
    A = esm.base
    F = conductor(A)
    top = max(esm(a) for a in A.elements(A.min_gen, F + A.h))
    return A.max_gen + A.h * (top + 1)


def v_set(esm: ExtendedSemiModule) -> list:
    """V(A, phi) = {(a, b) : b > a, phi(a) > phi(b) > phi(a - h)}, sorted."""
    A, h = esm.base, esm.base.h
    bound = _search_bound(esm)
    firsts = set(A.gens) | {a + h for a in esm.excess_points()}
    pairs = []
    for a in sorted(firsts):
        pa, below = esm(a), esm(a - h)
        for b in range(a + 1, bound):
            if b in A and pa > esm(b) > below:
                pairs.append((a, b))
    return pairs


def v_set_cyclic(esm: ExtendedSemiModule) -> list:
    """The simplified pair set {(b_i, b) : b > b_i, phi(b) < phi(b_i)} for cyclic phi."""
    A = esm.base
    bound = _search_bound(esm)
    return sorted(
        (g, b) for g in A.gens for b in range(g + 1, bound) if b in A and esm(b) < esm(g)
    )


@dataclass(frozen=True)
class ReductionStep:
    esm: ExtendedSemiModule
    point: int | None = None
    alpha: int | None = None
    depth: int | None = None
    replaced: Coweight | None = None


def _replace_entries(mu_prev, old, new):
    bag = list(mu_prev)
    for v in old:
        if v not in bag:
            return None
        bag.remove(v)
    return dominant(bag + list(new))


def reduce_to_cyclic(esm: ExtendedSemiModule) -> list:
    """The chain (A, phi_n) = (A, phi), ..., (A, phi_0) = cyclic, top to bottom.

    With x_1 > ... > x_n the excess points, phi_i agrees with phi on [x_i, oo)
    and is copied down by steps of -1 below x_i.  Each step records its mu^i
    as found by a decomposition and, in ``replaced``, the value predicted from
    mu^{i-1} by exchanging two entries.
    """
    A, h = esm.base, esm.base.h
    xs = sorted(esm.excess_points(), reverse=True)
    n = len(xs)
    window = sorted(esm.phi)

    def phi_i(i):
        if i == 0:
            return {}
        thr = xs[i - 1]
        vals = {}
        for a in reversed(window):
            if a >= thr:
                vals[a] = esm.phi[a]
            else:
                vals[a] = vals.get(a + h, esm(a + h)) - 1
        return vals

    def mu_of(values):
        probe = ExtendedSemiModule.from_values(A, values, esm.mu)
        dec = find_decomposition(probe, mu=_any_mu(probe))
        return probe, dominant(dec.start_values) if dec else None

    steps = [None] * (n + 1)
    prev_esm, prev_mu = mu_of(phi_i(0))
    steps[0] = ReductionStep(ExtendedSemiModule.from_values(A, {}, prev_mu))
    for i in range(1, n + 1):
        cur, cur_mu = mu_of(phi_i(i))
        x = xs[i - 1]
        alpha = esm(x + h) - 1 - esm(x)
        depth = 0
        while x - (depth + 1) * h in A:
            depth += 1
        top = prev_esm(x)
        predicted = _replace_entries(
            prev_mu, (top - depth, top - alpha + 1), (top - alpha - depth, top + 1)
        )
        steps[i] = ReductionStep(
            ExtendedSemiModule(A, cur_mu, cur.phi, cur.window_bound) if cur_mu else cur,
            x, alpha, depth, predicted,
        )
        prev_esm, prev_mu = cur, cur_mu
    return list(reversed(steps))


def _any_mu(esm: ExtendedSemiModule):
    """The start multiset forced by the level counts, whether or not matchable."""
    h = esm.base.h
    D = esm.excess_points()
    slots = list(esm.base.gens) + [a + h for a in D]
    counts = Counter(esm(s) for s in slots)
    counts.subtract(Counter(esm(a) + 1 for a in D))
    bag = []
    for v, c in counts.items():
        if c < 0:
            return None
        bag += [v] * c
    return tuple(sorted(bag))


def propdim_bijection(A: SemiModule) -> dict:
    """(b_i, b) -> b - b_i + b_0 on V of the cyclic extended semi-module of A."""
    t = type_of(A)
    if dominant(t) != t:
        raise InvalidInput(f"type {t} of A is not dominant")
    b0 = A.min_gen
    return {(bi, b): b - bi + b0 for bi, b in v_set(cyclic_of(A))}


def missing_above_min(A: SemiModule) -> list:
    """{a not in A : a > min B}."""
    return [a for a in range(A.min_gen + 1, conductor(A)) if a not in A]
