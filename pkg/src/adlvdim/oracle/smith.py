"""Smith reduction over k[[t]] / t^K, entries stored as coefficient lists."""
from __future__ import annotations

from ..errors import InsufficientPrecision
from .field import GF


def valuation(f: list) -> int:
    for i, c in enumerate(f):
        if c:
            return i
    return len(f)


def _mul(F: GF, f: list, g: list, K: int) -> list:
    out = [0] * K
    for i, a in enumerate(f[:K]):
        if not a:
            continue
        for j in range(K - i):
            b = g[j] if j < len(g) else 0
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def _unit_inverse(F: GF, u: list, K: int) -> list:
    inv = [0] * K
    inv[0] = F.inv(u[0])
    for k in range(1, K):
        acc = 0
        for j in range(1, k + 1):
            if j < len(u) and u[j]:
                acc = F.add(acc, F.mul(u[j], inv[k - j]))
        inv[k] = F.neg(F.mul(acc, inv[0]))
    return inv


def _quotient(F: GF, f: list, pivot: list, v: int, K: int) -> list:
    """f / pivot where val(pivot) = v <= val(f); known modulo t^(K - v)."""
    n = K - v
    return _mul(F, f[v:], _unit_inverse(F, pivot[v:], n), n)


def _sub_scaled(F: GF, f: list, q: list, g: list, K: int) -> list:
    prod = _mul(F, q, g, K)
    return [F.sub(a, b) for a, b in zip(f, prod)]


def elementary_divisors(F: GF, matrix: list, K: int) -> list:
    """Valuations of the elementary divisors of a square matrix over k[[t]]/t^K.

    Pivot on an entry of least valuation, clear its row and column, recurse.
    A pivot whose valuation reaches K - 1 is too close to the truncation to be
    trusted and raises InsufficientPrecision.
    """
    M = [[list(e) + [0] * (K - len(e)) for e in row] for row in matrix]
    n = len(M)
    out = []
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                v = valuation(M[i][j])
                if best is None or v < best[0]:
                    best = (v, i, j)
        v, i, j = best
        if v >= K - 1:
            raise InsufficientPrecision(f"pivot valuation {v} at truncation t^{K}")
        M[k], M[i] = M[i], M[k]
        for row in M:
            row[k], row[j] = row[j], row[k]
        piv = M[k][k]
        for r in range(k + 1, n):
            if valuation(M[r][k]) < K:
                q = _quotient(F, M[r][k], piv, v, K)
                M[r] = [_sub_scaled(F, M[r][c], q, M[k][c], K) for c in range(n)]
        for c in range(k + 1, n):
            if valuation(M[k][c]) < K:
                q = _quotient(F, M[k][c], piv, v, K)
                for r in range(k, n):
                    M[r][c] = _sub_scaled(F, M[r][c], q, M[r][k], K)
        out.append(v)
    return sorted(out)
