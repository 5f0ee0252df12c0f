"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored over its minimal conductor N as an integer vector of
length phi(N) plus one positive denominator, coordinates taken in the power
basis 1, zeta_N, ..., zeta_N^(phi(N)-1). Operands with different conductors are
embedded into Q(zeta_lcm) first, and every result is reduced back to its
minimal conductor, so equality is plain structural equality.

The text syntax is GAP-like: ``E(N)`` denotes exp(2 pi i / N), e.g.
``"-E(3)^2"``, ``"3/2*E(5)+E(5)^4"``.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Number = Union[int, Fraction, "Cyclotomic"]


# ---------------------------------------------------------------------------
# field data per conductor


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return sorted(set(_factor(n)))


def euler_phi(n: int) -> int:
    out = n
    for p in prime_divisors(n):
        out = out // p * (p - 1)
    return out


def _poly_divmod(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, coefficients lowest degree first; den monic
    num = list(num)
    dq = len(num) - len(den)
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1]
        quot[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first, via x^n - 1 = prod_{d | n} Phi_d."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^e in the power basis for e = 0..n-1."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    v = [0] * phi
    v[0] = 1
    for _ in range(n):
        rows.append(tuple(v))
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            for i in range(phi):
                v[i] -= top * poly[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _descend_solver(n: int, m: int):
    """Pivot rows and inverse matrix expressing Q(zeta_m)-elements of Q(zeta_n) in the zeta_m basis."""
    table = _power_table(n)
    step = n // m
    phi_m = euler_phi(m)
    cols = [table[(i * step) % n] for i in range(phi_m)]
    rows = [[Fraction(cols[j][r]) for j in range(phi_m)] for r in range(euler_phi(n))]
    # choose phi_m independent rows greedily
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    for r, row in enumerate(rows):
        cand = list(row)
        for b, lead in basis:
            if cand[lead]:
                f = cand[lead] / b[lead]
                cand = [x - f * y for x, y in zip(cand, b)]
        lead = next((i for i, x in enumerate(cand) if x), None)
        if lead is not None:
            basis.append((cand, lead))
            pivots.append(r)
            if len(pivots) == phi_m:
                break
    sub = [rows[r] for r in pivots]
    return tuple(pivots), _invert(sub)


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(mat)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-x for x in num], -den
    g = den
    for x in num:
        if g == 1:
            break
        g = math.gcd(g, x)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


# ---------------------------------------------------------------------------


class Cyclotomic:
    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, num: Iterable[int], den: int = 1, *, reduce: bool = True):
        num = list(num)
        if len(num) != euler_phi(N):
            raise ValueError(f"expected {euler_phi(N)} coordinates for conductor {N}")
        num, den = _normalize(num, den)
        self.N, self.num, self.den = N, num, den
        self._hash = None
        if reduce:
            z = _reduce(self)
            self.N, self.num, self.den = z.N, z.num, z.den

    @classmethod
    def _make(cls, N, num, den) -> "Cyclotomic":
        z = cls.__new__(cls)
        z.N, z.num, z.den = N, num, den
        z._hash = None
        return z

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        q = Fraction(q)
        return cls._make(1, (q.numerator,), q.denominator)

    @classmethod
    def root_of_unity(cls, N: int, a: int = 1) -> "Cyclotomic":
        if N < 1:
            raise ValueError("conductor must be positive")
        return cls(N, _power_table(N)[a % N])

    @classmethod
    def coerce(cls, x: Number) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # -- structure ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    @property
    def conductor(self) -> int:
        return self.N

    def is_rational(self) -> bool:
        return self.N == 1

    def is_integer(self) -> bool:
        return self.N == 1 and self.den == 1

    def to_fraction(self) -> Fraction:
        if self.N != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def embed(self, M: int) -> tuple[list[int], int]:
        """Coordinates (numerators, denominator) of self inside Q(zeta_M); N must divide M."""
        if M % self.N:
            raise ValueError(f"conductor {self.N} does not divide {M}")
        if M == self.N:
            return list(self.num), self.den
        table = _power_table(M)
        step = M // self.N
        out = [0] * euler_phi(M)
        for i, c in enumerate(self.num):
            if c:
                for j, t in enumerate(table[i * step]):
                    if t:
                        out[j] += c * t
        return out, self.den

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Cyclotomic":
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        M = _lcm(self.N, other.N)
        a, da = self.embed(M)
        b, db = other.embed(M)
        return Cyclotomic(M, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._make(self.N, tuple(-x for x in self.num), self.den)

    def __sub__(self, other) -> "Cyclotomic":
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return ZERO
            return Cyclotomic(self.N, [x * q.numerator for x in self.num], self.den * q.denominator, reduce=False)
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        if other.N == 1:
            return self * Fraction(other.num[0], other.den)
        if self.N == 1:
            return other * Fraction(self.num[0], self.den)
        M = _lcm(self.N, other.N)
        a, da = self.embed(M)
        b, db = other.embed(M)
        table = _power_table(M)
        out = [0] * euler_phi(M)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in bnz:
                c = x * y
                for k, t in enumerate(table[(i + j) % M]):
                    if t:
                        out[k] += c * t
        return Cyclotomic(M, out, da * db)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return self * Cyclotomic.coerce(other).inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.N == 1:
            return Cyclotomic.rational(1 / Fraction(self.num[0], self.den))
        # solve (multiplication-by-self matrix) * x = e_0 over Q
        N = self.N
        phi = euler_phi(N)
        table = _power_table(N)
        cols = []
        for j in range(phi):
            col = [0] * phi
            for i, c in enumerate(self.num):
                if c:
                    for k, t in enumerate(table[(i + j) % N]):
                        if t:
                            col[k] += c * t
            cols.append(col)
        mat = [[Fraction(cols[j][r], self.den) for j in range(phi)] for r in range(phi)]
        inv = _invert(mat)
        x = [row[0] for row in inv]
        den = math.lcm(*(q.denominator for q in x))
        return Cyclotomic(N, [int(q * den) for q in x], den)

    def galois(self, a: int) -> "Cyclotomic":
        """Image under zeta_N -> zeta_N^a; a must be prime to N."""
        N = self.N
        if math.gcd(a, N) != 1:
            raise ValueError(f"{a} is not a unit modulo {N}")
        table = _power_table(N)
        out = [0] * euler_phi(N)
        for i, c in enumerate(self.num):
            if c:
                for k, t in enumerate(table[(a * i) % N]):
                    if t:
                        out[k] += c * t
        return Cyclotomic._make(N, tuple(out), self.den)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def norm(self) -> Fraction:
        out = Cyclotomic.rational(1)
        for a in range(1, self.N + 1):
            if math.gcd(a, self.N) == 1:
                out = out * self.galois(a)
        return out.to_fraction()

    def approx(self) -> complex:
        z = cmath.exp(2j * math.pi / self.N)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.N == other.N and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        if self._hash is None:
            if self.N == 1:
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.N, self.num, self.den))
        return self._hash

    def sort_key(self) -> tuple:
        return (self.N, self.num, self.den)

    def __repr__(self) -> str:
        return f"Cyclotomic({format_cyclotomic(self)!r})"

    def __str__(self) -> str:
        return format_cyclotomic(self)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _in_subfield(z: Cyclotomic, M: int) -> bool:
    N = z.N
    for t in range(1, N // M):
        a = 1 + M * t
        if math.gcd(a, N) == 1 and z.galois(a) != z:
            return False
    return True


def _descend(z: Cyclotomic, M: int) -> Cyclotomic:
    pivots, inv = _descend_solver(z.N, M)
    v = [z.num[r] for r in pivots]
    y = [sum(row[k] * v[k] for k in range(len(v))) for row in inv]
    den = math.lcm(*(q.denominator for q in y)) if y else 1
    return Cyclotomic._make(M, *_normalize([int(q * den) for q in y], den * z.den))


def _reduce(z: Cyclotomic) -> Cyclotomic:
    changed = True
    while changed and z.N > 1:
        changed = False
        for p in prime_divisors(z.N):
            M = z.N // p
            if _in_subfield(z, M):
                z = _descend(z, M)
                changed = True
                break
    return z


def reduce_conductor(z: Cyclotomic) -> Cyclotomic:
    """Return z over its minimal conductor (values are always kept reduced, so this is z)."""
    return _reduce(z)


def E(N: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.root_of_unity(N, k)


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


# ---------------------------------------------------------------------------
# text syntax


def format_cyclotomic(z: Cyclotomic) -> str:
    """Render as a sum of ``c*E(N)^k`` terms over the minimal conductor."""
    if z.N == 1:
        return _fmt_rational(Fraction(z.num[0], z.den))
    parts = []
    for k, c in enumerate(z.num):
        if not c:
            continue
        q = Fraction(c, z.den)
        if k == 0:
            parts.append(_fmt_rational(q))
            continue
        root = f"E({z.N})" if k == 1 else f"E({z.N})^{k}"
        if q == 1:
            parts.append(root)
        elif q == -1:
            parts.append("-" + root)
        else:
            parts.append(f"{_fmt_rational(q)}*{root}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_FACTOR = re.compile(r"E\((\d+)\)(?:\^(-?\d+))?|(\d+)(?:/(\d+))?")


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse integers, fractions ``a/b`` and sums/products of ``c*E(N)^k`` terms."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic expression")
    if s == ".":
        return ZERO
    total = ZERO
    pos = 0
    while pos < len(s):
        sign = 1
        while pos < len(s) and s[pos] in "+-":
            if s[pos] == "-":
                sign = -sign
            pos += 1
        term = Cyclotomic.rational(sign)
        while True:
            m = _FACTOR.match(s, pos)
            if not m:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            if m.group(1):
                k = int(m.group(2)) if m.group(2) is not None else 1
                term = term * E(int(m.group(1)), k)
            else:
                term = term * Fraction(int(m.group(3)), int(m.group(4) or 1))
            pos = m.end()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                continue
            break
        total = total + term
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse {text!r} at position {pos}")
    return total
