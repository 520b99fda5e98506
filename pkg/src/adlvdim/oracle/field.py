"""Small finite fields GF(p^n) with table arithmetic.

Elements are ints in ``range(p**n)``: the base-p digits are the coefficients
of a polynomial in the generator, reduced modulo a primitive polynomial.
The Frobenius of the base field (order q = p) is ``x -> x**p``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import InvalidInput


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _digits(x, p, n):
    out = []
    for _ in range(n):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p):
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _times_generator(ds, poly, p):
    # multiply by the generator modulo the monic polynomial with low coefficients ``poly``
    n = len(ds)
    top = ds[-1]
    shifted = [0] + ds[:-1]
    return [(shifted[i] - top * poly[i]) % p for i in range(n)]


class GF:
    """The field with p**n elements."""

    def __init__(self, p: int = 2, n: int = 4):
        if not _is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if n < 1:
            raise InvalidInput("extension degree must be positive")
        self.p, self.n = p, n
        self.order = p ** n
        self.poly, self.exp = self._primitive()
        self.log = [0] * self.order
        for i, x in enumerate(self.exp[: self.order - 1]):
            self.log[x] = i
        self._add = [
            [_undigits([(a + b) % p for a, b in zip(_digits(x, p, n), _digits(y, p, n))], p)
             for y in range(self.order)]
            for x in range(self.order)
        ]
        self._neg = [
            _undigits([(-a) % p for a in _digits(x, p, n)], p) for x in range(self.order)
        ]
        self._frob = [self.power(x, p) for x in range(self.order)]
        self._frob_inv = [0] * self.order
        for x, y in enumerate(self._frob):
            self._frob_inv[y] = x

    def _primitive(self):
        p, n, q = self.p, self.n, self.p ** self.n
        for low in product(range(p), repeat=n):
            poly = list(low)
            if n > 1 and poly[0] == 0:
                continue
            ds = [1] + [0] * (n - 1)
            seq = []
            seen = set()
            for _ in range(q - 1):
                x = _undigits(ds, p)
                if x in seen:
                    break
                seen.add(x)
                seq.append(x)
                ds = _times_generator(ds, poly, p)
            if len(seq) == q - 1:
                return poly, seq + seq
        raise AssertionError("no primitive polynomial found")

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def add(self, x, y):
        return self._add[x][y]

    def sub(self, x, y):
        return self._add[x][self._neg[y]]

    def neg(self, x):
        return self._neg[x]

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self.exp[self.log[x] + self.log[y]]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp[(self.order - 1 - self.log[x]) % (self.order - 1)]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, k):
        if x == 0:
            return 0 if k else 1
        return self.exp[(self.log[x] * k) % (self.order - 1)]

    def frob(self, x):
        """sigma(x) = x**p."""
        return self._frob[x]

    def frob_inv(self, x):
        return self._frob_inv[x]

    def elements(self):
        return range(self.order)

    def is_in_base_field(self, x):
        return self._frob[x] == x


@lru_cache(maxsize=None)
def get_field(p: int = 2, n: int = 4) -> GF:
    return GF(p, n)
