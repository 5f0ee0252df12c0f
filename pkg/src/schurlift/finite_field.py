"""Small finite fields GF(p^e) with table-driven arithmetic.

Elements are the integers 0..q-1; the base-p digits of an element are the
coefficients (lowest first) of its polynomial representative modulo the
defining polynomial.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not _is_prime(p):
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _poly_mulmod(a, b, modulus, p):
    e = len(modulus) - 1
    prod = [0] * (2 * e)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * modulus[j]) % p
    return prod[:e]


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    e = len(modulus) - 1
    # brute force: no monic factor of degree 1..e//2
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            r = list(modulus)
            for k in range(len(r) - 1, d - 1, -1):
                c = r[k]
                if c:
                    for j in range(d + 1):
                        r[k - d + j] = (r[k - d + j] - c * f[j]) % p
            if not any(r[:d]):
                return False
    return True


def default_modulus(q: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of the right degree (t^2+1 for GF(9))."""
    p, e = _prime_power(q)
    if e == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=e):
        mod = tuple(reversed(tail)) + (1,)
        if mod[0] and _is_irreducible(mod, p):
            return mod
    raise AssertionError("no irreducible polynomial found")


class GF:
    """GF(q) with precomputed addition and multiplication tables."""

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        p, e = _prime_power(q)
        self.q, self.p, self.e = q, p, e
        self.modulus = tuple(modulus) if modulus else default_modulus(q)
        if len(self.modulus) != e + 1 or not _is_irreducible(self.modulus, p):
            raise ValueError(f"bad defining polynomial {self.modulus} for GF({q})")
        vecs = [self._digits(x) for x in range(q)]
        self.add_table = [[self._pack([(a + b) % p for a, b in zip(vecs[x], vecs[y])]) for y in range(q)] for x in range(q)]
        if e == 1:
            self.mul_table = [[(x * y) % p for y in range(q)] for x in range(q)]
        else:
            self.mul_table = [
                [self._pack(_poly_mulmod(vecs[x], vecs[y], self.modulus, p)) for y in range(q)] for x in range(q)
            ]
        self.neg_table = [self._pack([(-a) % p for a in vecs[x]]) for x in range(q)]
        self.inv_table = [0] * q
        for x in range(1, q):
            self.inv_table[x] = next(y for y in range(1, q) if self.mul_table[x][y] == 1)

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return out

    def _pack(self, digits) -> int:
        x = 0
        for d in reversed(list(digits)):
            x = x * self.p + d
        return x

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.inv_table[a]

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
