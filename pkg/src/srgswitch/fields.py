"""Small finite fields as lookup tables.

Elements are the integers ``0..q-1``.  Prime fields use residues; GF(4)
encodes ``a + b*w`` as ``a | b << 1`` with ``w**2 = w + 1``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

SUPPORTED_ORDERS = (2, 3, 4, 5)


class UnsupportedFieldError(ValueError):
    pass


class FiniteField:
    __slots__ = ("q", "char", "add", "mul", "neg", "inv")

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise UnsupportedFieldError(f"GF({q}) is not supported (choose from {SUPPORTED_ORDERS})")
        self.q = q
        if q == 4:
            self.char = 2
            add = [[a ^ b for b in range(4)] for a in range(4)]
            mul = [[_gf4_mul(a, b) for b in range(4)] for a in range(4)]
        else:
            self.char = q
            add = [[(a + b) % q for b in range(q)] for a in range(q)]
            mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        self.add = tuple(tuple(r) for r in add)
        self.mul = tuple(tuple(r) for r in mul)
        self.neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
        self.inv = (None,) + tuple(next(b for b in range(1, q) if mul[a][b] == 1) for a in range(1, q))

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def elements(self) -> range:
        return range(self.q)

    def squares(self) -> set[int]:
        return {self.mul[a][a] for a in range(1, self.q)}

    def vectors(self, dim: int):
        """All vectors of ``F_q^dim`` in lexicographic order (index = base-q value)."""
        return product(range(self.q), repeat=dim)

    def dot(self, x, y) -> int:
        acc = 0
        for a, b in zip(x, y):
            acc = self.add[acc][self.mul[a][b]]
        return acc

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _gf4_mul(a: int, b: int) -> int:
    # polynomial product modulo w^2 + w + 1 over GF(2)
    r = 0
    for i in range(2):
        if b >> i & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
