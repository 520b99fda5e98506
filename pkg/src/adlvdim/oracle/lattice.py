"""Lattices M in N = L^h with b sigma(M) inside M, in exact echelon form.

Every lattice here contains N_{>=F}, F the conductor of A(M) = {iv(v) : v in M}.
So M is spanned by N_{>=F} together with the reduced echelon vectors

    w_a = e_a + (coefficients at positions in [a, F) \\ A),   a in A, a < F,

which are finite and exact.  Membership, phi(M) and the relative position
are then linear algebra over the residue field; the only approximation left
is the t-adic depth of the Smith reduction.
"""
from __future__ import annotations

from ..errors import InsufficientPrecision, InvalidInput
from ..semimodule import NEG_INF, SemiModule, SlopeDatum
from .field import GF
from .smith import elementary_divisors
from .vectors import TruncVector, iv


def solve_linear(F: GF, columns: list, rhs: list):
    """Some x with sum_j x_j columns[j] = rhs, or None."""
    n_rows = len(rhs)
    rows = [[col[i] for col in columns] + [rhs[i]] for i in range(n_rows)]
    n = len(columns)
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def nullspace(F: GF, columns: list, n: int) -> list:
    """Basis of {d : sum_j d_j columns[j] = 0}, columns given as equal-length lists."""
    rows_n = len(columns[0]) if columns else 0
    # reduce the transpose: rows are equations
    eqs = [[columns[j][i] for j in range(n)] for i in range(rows_n)]
    pivots, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, len(eqs)) if eqs[i][c]), None)
        if p is None:
            continue
        eqs[r], eqs[p] = eqs[p], eqs[r]
        inv = F.inv(eqs[r][c])
        eqs[r] = [F.mul(inv, x) for x in eqs[r]]
        for i in range(len(eqs)):
            if i != r and eqs[i][c]:
                f = eqs[i][c]
                eqs[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(eqs[i], eqs[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        d = [0] * n
        d[free] = 1
        for i, c in enumerate(pivots):
            d[c] = F.neg(eqs[i][free])
        basis.append(d)
    return basis


def reduced_echelon(F: GF, rows: list) -> dict:
    """Reduced echelon form of sparse vectors, keyed by leading position."""
    out = {}
    for row in rows:
        row = {i: c for i, c in row.items() if c}
        for p in sorted(out):
            c = row.get(p, 0)
            if c:
                for i, w in out[p].items():
                    row[i] = F.sub(row.get(i, 0), F.mul(c, w))
                row = {i: c for i, c in row.items() if c}
        if not row:
            continue
        lead = min(row)
        inv = F.inv(row[lead])
        row = {i: F.mul(inv, c) for i, c in row.items()}
        for p in out:
            c = out[p].get(lead, 0)
            if c:
                for i, w in row.items():
                    out[p][i] = F.sub(out[p].get(i, 0), F.mul(c, w))
                out[p] = {i: c for i, c in out[p].items() if c}
        out[lead] = row
    return out


class Lattice:
    """The O_L-span of h generators with pairwise incongruent leading indices."""

    def __init__(self, gens, slope: SlopeDatum, field: GF, precision: int | None = None):
        h = slope.h
        if len(gens) != h:
            raise InvalidInput(f"need {h} generators, got {len(gens)}")
        normed = []
        for v in gens:
            i = iv(v)
            normed.append(v.truncate(v.hi).scale(field.inv(v[i])))
        normed.sort(key=iv)
        B = tuple(iv(v) for v in normed)
        if len({b % h for b in B}) != h:
            raise InvalidInput(f"leading indices {B} are not incongruent mod {h}")
        self.slope, self.field = slope, field
        self.gens = tuple(normed)
        self.B = B
        self._gen = {b % h: b for b in B}
        self.F = max(b - h for b in B) + 1
        self.precision = precision if precision is not None else min(v.hi for v in normed) - min(B)
        self._rref = self._echelon()
        self._stable = {}

    # index sets -------------------------------------------------------------
    def in_A(self, a: int) -> bool:
        return a >= self._gen[a % self.slope.h]

    def phi_max(self, a: int):
        if not self.in_A(a):
            return NEG_INF
        c = a + self.slope.m
        return (c - self._gen[c % self.slope.h]) // self.slope.h

    @property
    def volume(self) -> int:
        h = self.slope.h
        return (sum(self.B) - h * (h - 1) // 2) // h

    def a_of(self) -> SemiModule:
        if self.volume != 0:
            raise InvalidInput(f"lattice has volume {self.volume}, not 0")
        return SemiModule(self.slope, self.B)

    # echelon form -------------------------------------------------------------
    def _echelon(self) -> dict:
        h, F, fld = self.slope.h, self.F, self.field
        by_class = {iv(v) % h: v for v in self.gens}
        for v in self.gens:
            if v.hi < F:
                raise InsufficientPrecision(
                    f"generator at e_{iv(v)} known to e_{v.hi - 1}, need e_{F - 1}"
                )
        rref = {}
        for a in range(F - 1, min(self.B) - 1, -1):
            if not self.in_A(a):
                continue
            g = by_class[a % h]
            k = a - iv(g)
            vec = [g[i - k] for i in range(a, F)]
            for p in range(a + 1, F):
                c = vec[p - a]
                if c and self.in_A(p):
                    w = rref[p]
                    for i in range(p, F):
                        if w[i - p]:
                            vec[i - a] = fld.sub(vec[i - a], fld.mul(c, w[i - p]))
            rref[a] = tuple(vec)
        return rref

    def echelon_vector(self, a: int) -> dict:
        """w_a as {position: coefficient}; e_a itself from the conductor on."""
        if not self.in_A(a):
            raise InvalidInput(f"{a} is not in A(M)")
        if a >= self.F:
            return {a: 1}
        return {a + i: c for i, c in enumerate(self._rref[a]) if c}

    def residual(self, u: dict) -> dict:
        """Coefficients left at positions outside A below F after reducing u by M."""
        F, fld = self.F, self.field
        work = {i: c for i, c in u.items() if i < F and c}
        out = {}
        lo = min(work, default=F)
        for i in range(lo, F):
            c = work.get(i, 0)
            if not c:
                continue
            if self.in_A(i):
                for j, w in enumerate(self._rref[i]):
                    if w:
                        work[i + j] = fld.sub(work.get(i + j, 0), fld.mul(c, w))
            else:
                out[i] = c
        return out

    def contains(self, v) -> bool:
        if isinstance(v, TruncVector):
            if v.hi < self.F and not v.is_zero():
                raise InsufficientPrecision(f"vector known to e_{v.hi - 1}, need e_{self.F - 1}")
            v = {v.lo + i: c for i, c in enumerate(v.coeffs) if c and v.lo + i < self.F}
        return not self.residual(v)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.slope == other.slope
            and self.B == other.B
            and self._rref == other._rref
        )

    def __hash__(self):
        return hash((self.B, tuple(sorted(self._rref.items()))))

    # the map b sigma ------------------------------------------------------------
    def _bsigma(self, u: dict, n: int = 0) -> dict:
        """t^-n b sigma applied to a finite vector."""
        s = self.slope.m - n * self.slope.h
        return {i + s: self.field.frob(c) for i, c in u.items()}

    def is_stable(self) -> bool:
        return all(self.contains(self._bsigma(self.echelon_vector(b))) for b in self.B)

    def phi_of(self, a: int):
        """max{n : t^-n b sigma(v) in M for some v in M with iv(v) = a}."""
        if not self.in_A(a):
            return NEG_INF
        for n in range(self.phi_max(a), -1, -1):
            if self._reachable(a, n):
                return n
        raise InvalidInput(f"b sigma(M) is not contained in M (at a={a})")

    def _reachable(self, a: int, n: int) -> bool:
        # v = w_a + sum_p d_p w_p over p in A, a < p < T; beyond T the image lies in N_{>=F}
        h, m = self.slope.h, self.slope.m
        T = self.F + n * h - m
        others = [p for p in range(a + 1, T) if self.in_A(p)]
        target = self.residual(self._bsigma(self.echelon_vector(a), n))
        cols = [self.residual(self._bsigma(self.echelon_vector(p), n)) for p in others]
        keys = sorted(set(target).union(*cols))
        if not keys:
            return True
        fld = self.field
        sol = solve_linear(
            fld, [[c.get(k, 0) for k in keys] for c in cols], [fld.neg(target.get(k, 0)) for k in keys]
        )
        return sol is not None

    def stable_part(self, n: int):
        """Echelon form of M_n = {v in M : t^-n b sigma(v) in M}.

        M_n contains N_{>=F_n}, F_n = F + max(0, n h - m), so it is the span of
        N_{>=F_n} and the returned vectors.  The membership condition is linear
        in sigma of the coordinates, so the kernel is pulled back by sigma^-1.
        Returns (F_n, {pivot: {position: coefficient}}).
        """
        if n in self._stable:
            return self._stable[n]
        h, m, fld = self.slope.h, self.slope.m, self.field
        Fn = self.F + max(0, n * h - m)
        ps = [p for p in range(min(self.B), Fn) if self.in_A(p)]
        res = [self.residual(self._bsigma(self.echelon_vector(p), n)) for p in ps]
        keys = sorted(set().union(*res))
        kernel = nullspace(fld, [[r.get(k, 0) for k in keys] for r in res], len(ps))
        rows = []
        for vec in kernel:
            acc = {}
            for p, c in zip(ps, vec):
                if c:
                    c = fld.frob_inv(c)
                    for i, w in self.echelon_vector(p).items():
                        if i < Fn:
                            acc[i] = fld.add(acc.get(i, 0), fld.mul(c, w))
            rows.append(acc)
        self._stable[n] = (Fn, reduced_echelon(fld, rows))
        return self._stable[n]

    def phi_values(self, lo: int, hi: int) -> dict:
        return {a: self.phi_of(a) for a in range(lo, hi) if self.in_A(a)}

    # relative position ------------------------------------------------------------
    def coordinates(self, u: dict, depth: int) -> list:
        """Coefficients c_s in k[[t]]/t^depth with u = sum_s c_s w_{b_s}."""
        h, fld = self.slope.h, self.field
        index = {b % h: s for s, b in enumerate(self.B)}
        basis = [self.echelon_vector(b) for b in self.B]
        coords = [[0] * depth for _ in self.B]
        work = {i: c for i, c in u.items() if c}
        stop = max(self.B) + depth * h
        while work:
            i = min(work)
            if i >= stop:
                break
            c = work.pop(i)
            if not self.in_A(i):
                raise InvalidInput(f"vector has e_{i} outside A(M); it is not in M")
            s = index[i % h]
            k = (i - self.B[s]) // h
            if k < depth:
                coords[s][k] = c
            for j, w in basis[s].items():
                if j == self.B[s]:
                    continue
                pos = j + k * h
                val = fld.sub(work.get(pos, 0), fld.mul(c, w))
                if val:
                    work[pos] = val
                else:
                    work.pop(pos, None)
        return coords

    def relative_position(self, depth: int | None = None) -> tuple:
        """inv(M, b sigma M): elementary divisor valuations of b sigma on M."""
        K = depth if depth is not None else self.precision // self.slope.h
        if K < 2:
            raise InsufficientPrecision(f"t-adic depth {K} is too small")
        columns = [self.coordinates(self._bsigma(self.echelon_vector(b)), K) for b in self.B]
        matrix = [[columns[r][s] for r in range(len(self.B))] for s in range(len(self.B))]
        return tuple(elementary_divisors(self.field, matrix, K))

    # constructors -------------------------------------------------------------------
    @classmethod
    def standard(cls, slope: SlopeDatum, field: GF, shift: int = 0, precision: int = 30):
        """t^shift M_0, M_0 spanned by e_0, ..., e_{h-1}."""
        h = slope.h
        gens = [TruncVector.basis(i + shift * h, i + shift * h + precision, field) for i in range(h)]
        return cls(gens, slope, field, precision)

    @classmethod
    def from_vectors(cls, vectors, slope: SlopeDatum, field: GF, precision: int | None = None):
        """O_L-span of any finite family that spans a full lattice, via Hermite reduction."""
        h = slope.h
        pool = [v for v in vectors if not v.is_zero()]
        basis = {}
        while pool:
            v = pool.pop()
            if v.is_zero():
                continue
            i = iv(v)
            r = i % h
            if r not in basis:
                basis[r] = v
                continue
            g = basis[r]
            if i < iv(g):
                basis[r], v, g = v, g, v
                i = iv(v)
            c = field.neg(field.div(v[i], g[iv(g)]))
            pool.append(v.axpy(c, g.shift(i - iv(g))))
        if len(basis) != h:
            raise InvalidInput("vectors do not span a full lattice")
        return cls(list(basis.values()), slope, field, precision)
