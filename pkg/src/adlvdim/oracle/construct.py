"""Build the lattice M(x) of a stratum point x, and recover x from M(x).

The vectors v(a), a in A, are determined coefficient layer by coefficient
layer (layer j is the coefficient of e_{a+j}).  Layer 0 is 1 for every a.
Within a layer the residue classes are visited in the order y, y+m, y+2m, ...
(y = max B) and each class from small a to large.  Then

    v(y)     = e_y + sum_{(y,b) in V} x_{y,b} v(b)
    v(a)     = t v(a-h) + sum_{(a,b) in V} x_{a,b} v(b)          if a-h in A
    v(a)     = t^-phi(a') b sigma v(a') + sum_{(a,b) in V} x_{a,b} v(b)   otherwise,

with a' the least element of A in the class of a - m such that
a' + m - phi(a') h = a.  Every term on the right needs only earlier layers
or earlier members of the current layer, so the recursion is explicit.
The generators of M(x) are v(b), b in B.
"""
from __future__ import annotations

import random

from ..errors import InvalidInput, RecoveryError
from ..extended import ExtendedSemiModule, find_decomposition, v_set
from ..semimodule import conductor
from .field import GF
from .lattice import Lattice
from .vectors import TruncVector


def _predecessor(esm: ExtendedSemiModule, a: int) -> int:
    """Least a' in A with a' + m - phi(a') h = a."""
    A, h, m = esm.base, esm.base.h, esm.base.m
    c = A.gen_of(a - m)
    # phi(c) - (c + m - a) / h never decreases along the class, so stop once positive
    while esm(c) * h <= c + m - a:
        if c + m - esm(c) * h == a:
            return c
        c += h
    raise InvalidInput(f"no a' with a' + m - phi(a') h = {a}")


def _layout(esm: ExtendedSemiModule, J: int):
    A, h, m = esm.base, esm.base.h, esm.base.m
    y = A.max_gen
    pre = {a: _predecessor(esm, a) for a in A.gens if a != y}
    pairs = v_set(esm)
    top = max([A.min_gen + J, conductor(A) + h + 1]
              + [b + 1 for _, b in pairs] + [c + 1 for c in pre.values()])
    elems = A.elements(A.min_gen, top)
    by_class = {}
    for a in elems:
        by_class.setdefault(a % h, []).append(a)
    order = []
    for i in range(h):
        order += by_class.get((y + i * m) % h, [])
    return y, top, elems, order, pre, pairs


def _run(esm, field: GF, J: int, x=None, target: Lattice | None = None):
    """The layer recursion; with ``target`` the x-values are solved for instead."""
    A, h, m = esm.base, esm.base.h, esm.base.m
    y, top, elems, order, pre, pairs = _layout(esm, J)
    members = set(elems)
    by_first = {}
    for a, b in pairs:
        by_first.setdefault(a, []).append(b)
    x = dict(x or {})
    coef = {a: [1] + [0] * (J - 1) for a in elems}

    def layer(a, j):
        # coefficient of e_{a+j} in v(a); zero past the computed range
        if a not in members or j >= J:
            raise InvalidInput(f"v({a}) layer {j} is outside the computed window")
        return coef[a][j]

    for j in range(1, J):
        for a in order:
            if a == y:
                val = 0
            elif a - h in A:
                val = coef[a - h][j]
            else:
                val = field.frob(coef[pre[a]][j])
            solve_b = None
            for b in by_first.get(a, []):
                g = a + j - b
                if g < 0:
                    continue
                if g == 0 and target is not None:
                    solve_b = b
                    continue
                if b >= top:
                    raise InvalidInput(f"v({b}) is outside the computed window")
                c = x[(a, b)]
                if c:
                    val = field.add(val, field.mul(c, layer(b, g)))
            if solve_b is not None:
                x[(a, solve_b)] = _solve_entry(target, esm(a), coef, a, solve_b, val, field)
                val = field.add(val, x[(a, solve_b)])
            coef[a][j] = val
    gens = [TruncVector(b, tuple(coef[b]), field) for b in A.gens]
    return gens, x


def _solve_entry(M: Lattice, n: int, coef, a, b, rest, field: GF):
    """x_{a,b} from the condition v(a) in M_n, the part of M that t^-n b sigma keeps in M.

    As phi(M)(b) < n, b is not a leading index of M_n, so the coefficient of
    e_b in v(a) is fixed by the coefficients of v(a) at the pivots below b.
    """
    Fn, ech = M.stable_part(n)
    if a not in ech:
        raise RecoveryError(f"phi(M)({a}) < {n}: lattice is not in this stratum")
    if b in ech or b >= Fn:
        raise RecoveryError(f"phi(M)({b}) >= {n}: lattice is not in this stratum")
    S = 0
    for q in range(a, b):
        w = ech.get(q)
        if w and b in w:
            c = coef[a][q - a]
            if c:
                S = field.add(S, field.mul(c, w[b]))
    return field.sub(S, rest)


def _check_point(esm, x: dict):
    pairs = v_set(esm)
    if set(x) != set(pairs):
        raise InvalidInput(f"point coordinates {sorted(x)} differ from V = {pairs}")


def build_lattice(esm: ExtendedSemiModule, x: dict, field: GF, precision: int = 30) -> Lattice:
    """M(x): the lattice of the point x in the stratum of ``esm``."""
    _check_point(esm, x)
    gens, _ = _run(esm, field, precision, x)
    return Lattice(gens, esm.slope, field, precision)


def recover_point(esm: ExtendedSemiModule, M: Lattice, field: GF, precision: int = 30) -> dict:
    """The point x with M(x) = M, solved coordinate by coordinate.

    The result is verified by rebuilding M(x); a mismatch raises RecoveryError.
    """
    if M.B != esm.base.gens:
        raise RecoveryError(f"A(M) has generators {M.B}, stratum has {esm.base.gens}")
    _, x = _run(esm, field, precision, target=M)
    if build_lattice(esm, x, field, precision) != M:
        raise RecoveryError("rebuilt lattice differs from the input")
    return x


def special_point(esm: ExtendedSemiModule) -> dict:
    """x_{a+h, succ(a)} = 1 for every jump a -> succ(a) of the decomposition, else 0."""
    h = esm.base.h
    dec = find_decomposition(esm)
    if dec is None:
        raise InvalidInput("no decomposition of the requested type")
    x = {p: 0 for p in v_set(esm)}
    for a in esm.excess_points():
        key = (a + h, dec.successor[a])
        if key not in x:
            raise InvalidInput(f"jump pair {key} is not in V")
        x[key] = 1
    return x


def random_point(esm: ExtendedSemiModule, field: GF, rng: random.Random) -> dict:
    return {p: rng.randrange(field.order) for p in v_set(esm)}
