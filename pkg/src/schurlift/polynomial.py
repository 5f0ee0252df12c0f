"""Sparse multivariate polynomials with Python integer coefficients.

A :class:`SparsePoly` is a map from exponent tuples to nonzero integers in a
fixed number of variables. Exact division uses graded lexicographic order.
"""

from __future__ import annotations

import heapq
import operator
from collections import defaultdict
from typing import Iterable, Mapping

Monomial = tuple[int, ...]

_DEFAULT_NAMES = ("x", "y", "z", "w")


class DivisionError(ArithmeticError):
    """Raised when a division that was required to be exact leaves a remainder."""


class SparsePoly:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has wrong length for {n} variables")
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Monomial, int]) -> "SparsePoly":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> "SparsePoly":
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> "SparsePoly":
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def variables(cls, n: int) -> list["SparsePoly"]:
        return [cls.variable(n, i) for i in range(n)]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _check(self, other: "SparsePoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return SparsePoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SparsePoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            if not other:
                return SparsePoly.zero(self.n)
            return SparsePoly._raw(self.n, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict[Monomial, int] = defaultdict(int)
        n = self.n
        plus = operator.add
        for mb, cb in b.items():
            for ma, ca in a.items():
                acc[tuple(map(plus, ma, mb))] += ca * cb
        return SparsePoly._raw(n, {m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative exponent")
        result = SparsePoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(self.n, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono: Iterable[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def evaluate(self, point: Iterable):
        point = tuple(point)
        if len(point) != self.n:
            raise ValueError("point has wrong dimension")
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(point, m):
                if e:
                    t = t * v**e
            total = total + t
        return total

    def permute(self, perm: Iterable[int]) -> "SparsePoly":
        """Substitute x_i -> x_{perm[i]}."""
        perm = tuple(perm)
        out = {}
        for m, c in self.terms.items():
            e = [0] * self.n
            for i, k in enumerate(m):
                e[perm[i]] = k
            out[tuple(e)] = c
        return SparsePoly._raw(self.n, out)

    def to_string(self, names: Iterable[str] | None = None) -> str:
        if names is None:
            names = _DEFAULT_NAMES if self.n <= len(_DEFAULT_NAMES) else [f"x{i + 1}" for i in range(self.n)]
        names = list(names)
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            ]
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, term))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SparsePoly({self.n}, {self.to_string()!r})"


def grlex_key(mono: Monomial) -> tuple:
    return (sum(mono), mono)


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    p._check(q)
    return p + q


def mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    p._check(q)
    return p * q


def divide_exact(p: SparsePoly, d: SparsePoly) -> SparsePoly:
    """Return q with q*d == p, raising :class:`DivisionError` otherwise.

    Long division in graded lexicographic order; the working remainder is kept
    in a dict and its monomials in a max-heap with lazy deletion.
    """
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.n
    lead_m, lead_c = d.leading_term()
    d_terms = list(d.terms.items())
    rem = dict(p.terms)
    # grlex order packed into one integer per monomial so heap comparisons stay in C
    base = max(p.degree(), d.degree(), 0) + 1

    def code(m):
        k = sum(m)
        for e in m:
            k = k * base + e
        return -k

    heap = [(code(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict[Monomial, int] = {}
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        _, m = pop(heap)
        c = rem.get(m)
        if not c:
            continue
        shift = tuple(map(operator.sub, m, lead_m))
        if (n and min(shift) < 0) or c % lead_c:
            raise DivisionError(f"remainder term {c}*{m} is not divisible by the leading term of the divisor")
        qc = c // lead_c
        quot[shift] = qc
        for dm, dc in d_terms:
            t = tuple(map(operator.add, shift, dm))
            v = rem.get(t)
            if v is None:
                push(heap, (code(t), t))
                rem[t] = -qc * dc
            else:
                v -= qc * dc
                if v:
                    rem[t] = v
                else:
                    del rem[t]
    return SparsePoly._raw(n, quot)


def is_symmetric(p: SparsePoly) -> bool:
    """Invariance under every adjacent transposition (these generate S_n)."""
    for i in range(p.n - 1):
        perm = list(range(p.n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute(perm) != p:
            return False
    return True


def vandermonde(n: int) -> SparsePoly:
    """prod_{i<j} (x_i - x_j)."""
    xs = SparsePoly.variables(n)
    out = SparsePoly.constant(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] - xs[j])
    return out


def parse_poly(text: str, names: Iterable[str]) -> SparsePoly:
    """Parse the rendering produced by :meth:`SparsePoly.to_string` (debug helper)."""
    names = list(names)
    index = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    text = text.replace(" ", "")
    if text == "0":
        return SparsePoly.zero(n)
    terms: dict[Monomial, int] = {}
    chunks = []
    start = 0
    for i, ch in enumerate(text):
        if ch in "+-" and i > 0:
            chunks.append(text[start:i])
            start = i
    chunks.append(text[start:])
    for chunk in chunks:
        sign = -1 if chunk.startswith("-") else 1
        chunk = chunk.lstrip("+-")
        coef = 1
        e = [0] * n
        for f in chunk.split("*"):
            if f.isdigit():
                coef *= int(f)
            else:
                nm, _, ex = f.partition("^")
                e[index[nm]] += int(ex) if ex else 1
        m = tuple(e)
        terms[m] = terms.get(m, 0) + sign * coef
    return SparsePoly(n, terms)
