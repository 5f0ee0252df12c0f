"""Schur polynomials, Littlewood-Richardson products and the GL(3)/GL(4) identity families.

Every Schur polynomial is built twice, from the bialternant quotient and from
semistandard tableaux, and the two are required to agree before the result is
returned. LR coefficients come from an LR-tableau enumeration with the
lattice-word condition checked cell by cell.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .partitions import Partition, contains, format_partition, pieri_row
from .polynomial import SparsePoly, divide_exact, vandermonde


class SchurMismatchError(AssertionError):
    """The two Schur constructions disagreed; this is always a bug."""


# ---------------------------------------------------------------------------
# Tableaux and the two constructions


def semistandard_tableaux(lam: Iterable[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of shape ``lam`` with entries in 1..n.

    Rows are filled top to bottom, each row left to right, and candidate
    values are tried in increasing order, so the output is in row-by-row
    lexicographic order.
    """
    lam = tuple(Partition(lam))
    if len(lam) > n:
        return
    rows: list[tuple[int, ...]] = []

    def row_fillings(length: int, above: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
        acc: list[int] = []

        def rec(j: int, lo: int) -> Iterator[tuple[int, ...]]:
            if j == length:
                yield tuple(acc)
                return
            start = lo
            if above is not None:
                start = max(start, above[j] + 1)
            for v in range(start, n + 1):
                acc.append(v)
                yield from rec(j + 1, v)
                acc.pop()

        yield from rec(0, 1)

    def rec_rows(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(lam):
            yield tuple(rows)
            return
        above = rows[i - 1] if i else None
        for row in row_fillings(lam[i], above):
            rows.append(row)
            yield from rec_rows(i + 1)
            rows.pop()

    yield from rec_rows(0)


def schur_tableaux(lam: Iterable[int], n: int) -> SparsePoly:
    """S_lam in n variables as the content generating function of SSYT."""
    terms: dict[tuple[int, ...], int] = {}
    for t in semistandard_tableaux(lam, n):
        e = [0] * n
        for row in t:
            for v in row:
                e[v - 1] += 1
        m = tuple(e)
        terms[m] = terms.get(m, 0) + 1
    return SparsePoly._raw(n, terms)


def alternant(exponents: Iterable[int], n: int) -> SparsePoly:
    """det(x_j^{a_i}) for an exponent vector ``a`` of length n."""
    a = tuple(exponents)
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        e = [0] * n
        for i, j in enumerate(perm):
            e[j] = a[i]
        terms[tuple(e)] = terms.get(tuple(e), 0) + _perm_sign(perm)
    return SparsePoly(n, terms)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _vandermonde(n: int) -> SparsePoly:
    return vandermonde(n)


def schur_bialternant(lam: Iterable[int], n: int) -> SparsePoly:
    """S_lam in n variables as |x_j^{lam_i + n - i}| / Delta."""
    lam = Partition(lam)
    if len(lam) > n:
        return SparsePoly.zero(n)
    shifted = [lam.part(i) + n - 1 - i for i in range(n)]
    return divide_exact(alternant(shifted, n), _vandermonde(n))


@lru_cache(maxsize=4096)
def schur_poly(lam: Partition, n: int) -> SparsePoly:
    """The Schur polynomial S_lam(x_1, ..., x_n).

    Both constructions run and must agree; the zero polynomial comes back
    when ``lam`` has more than n parts.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lam = Partition(lam)
    via_tableaux = schur_tableaux(lam, n)
    via_bialternant = schur_bialternant(lam, n)
    if via_tableaux != via_bialternant:
        raise SchurMismatchError(f"bialternant and tableau constructions differ for {lam} in {n} variables")
    return via_tableaux


def schur(lam: Iterable[int], n: int) -> SparsePoly:
    return schur_poly(Partition(lam), n)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


class SchurExpansion(dict):
    """A nonnegative integer combination of Schur functions, keyed by partition."""

    def __init__(self, terms=None):
        super().__init__()
        for lam, c in dict(terms or {}).items():
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {lam}")
            if c:
                lam = Partition(lam)
                self[lam] = self.get(lam, 0) + c
        if len({lam.weight for lam in self}) > 1:
            raise ValueError("Schur expansion is not homogeneous")

    @property
    def weight(self) -> int | None:
        return next(iter(self)).weight if self else None

    def restrict(self, n: int) -> "SchurExpansion":
        """Drop the partitions with more than n parts (they vanish in n variables)."""
        return SchurExpansion({lam: c for lam, c in self.items() if len(lam) <= n})

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self)
        for lam, c in other.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(out)

    def to_poly(self, n: int) -> SparsePoly:
        out = SparsePoly.zero(n)
        for lam, c in self.items():
            out = out + schur_poly(lam, n) * c
        return out

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"partition": format_partition(lam), "multiplicity": c} for lam, c in self.sorted_items()]

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + f"S({format_partition(lam)})" for lam, c in self.sorted_items()
        )


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Number of LR tableaux of skew shape nu/lam with content mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight or not contains(nu, lam):
        return 0
    return _lr_count(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr_count(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if lam == nu else 0
    # cells of nu/lam in reverse reading order: rows top to bottom, right to left
    cells = []
    for r, row_len in enumerate(nu):
        start = lam[r] if r < len(lam) else 0
        for c in range(row_len - 1, start - 1, -1):
            cells.append((r, c))
    skew = set(cells)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)
    total = len(cells)

    def rec(idx: int) -> int:
        if idx == total:
            return 1
        r, c = cells[idx]
        hi = len(mu)
        right = filling.get((r, c + 1)) if (r, c + 1) in skew else None
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if (r - 1, c) in skew:
            lo = filling[(r - 1, c)] + 1
        # an LR tableau never places label v above row index v-1 of the skew rows
        hi = min(hi, r + 1)
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += rec(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return found

    return rec(0)


def lr_expand(lam: Iterable[int], mu: Iterable[int]) -> SchurExpansion:
    """The Schur expansion of S_lam * S_mu."""
    lam, mu = Partition(lam), Partition(mu)
    shapes = {lam}
    for row in mu:
        shapes = {nu for s in shapes for nu in pieri_row(s, row)}
    out = {}
    for nu in shapes:
        c = _lr_count(tuple(lam), tuple(mu), tuple(nu))
        if c:
            out[nu] = c
    return SchurExpansion(out)


def lr_product(*parts: Iterable[int]) -> SchurExpansion:
    """Expansion of a product of several Schur functions."""
    acc = SchurExpansion({Partition(): 1})
    for p in parts:
        nxt = SchurExpansion()
        for lam, c in acc.items():
            for nu, d in lr_expand(lam, p).items():
                nxt = nxt + SchurExpansion({nu: c * d})
        acc = nxt
    return acc


# ---------------------------------------------------------------------------
# Identity families


@dataclass
class IdentityReport:
    family: str
    m: int | None
    n_vars: int
    checks: dict[str, bool] = field(default_factory=dict)
    lhs: object = None
    rhs: object = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_json(self) -> dict:
        def show(x):
            if isinstance(x, SchurExpansion):
                return x.to_json()
            if isinstance(x, SparsePoly):
                return {"n": x.n, "terms": len(x)}
            return x

        return {
            "family": self.family,
            "m": self.m,
            "n_vars": self.n_vars,
            "passed": self.passed,
            "checks": dict(self.checks),
            "lhs": show(self.lhs),
            "rhs": show(self.rhs),
            "notes": list(self.notes),
        }


def _S(parts, n):
    return schur_poly(Partition(parts), n)


def verify_gl3_identity(m: int) -> IdentityReport:
    """S(m-1)S(1) + S(m-3)S(1,1,1) = S(m) + S(m-2)S(1,1) in three variables."""
    if m < 3:
        raise ValueError("the GL(3) family starts at m = 3")
    n = 3
    lhs = _S([m - 1], n) * _S([1], n) + _S([m - 3], n) * _S([1, 1, 1], n)
    rhs = _S([m], n) + _S([m - 2], n) * _S([1, 1], n)
    rep = IdentityReport("gl3", m, n)
    rep.checks["polynomial"] = lhs == rhs

    lhs_lr = lr_expand([m - 1], [1]) + lr_expand([m - 3], [1, 1, 1])
    rhs_lr = SchurExpansion({Partition([m]): 1}) + lr_expand([m - 2], [1, 1])
    rep.checks["lr_restricted"] = lhs_lr.restrict(n) == rhs_lr.restrict(n)
    if m >= 4:
        dropped = Partition([m - 3, 1, 1, 1])
        rep.checks["vanishing"] = _S(dropped, n).is_zero() and lhs_lr.get(dropped, 0) == 1
        rep.notes.append(f"S({format_partition(dropped)}) vanishes in 3 variables")
    rep.lhs, rep.rhs = lhs_lr, rhs_lr
    return rep


def gl3_adjoint_sides(n: int = 3) -> tuple[SparsePoly, SparsePoly]:
    s1, s2, s11, s111, s21, s22 = (_S(p, n) for p in ([1], [2], [1, 1], [1, 1, 1], [2, 1], [2, 2]))
    lhs = s2 * s22 + s2 * s1 * s111 + s22 * s11 + s11 * s1 * s111
    rhs = s21 * s21 + s21 * s111 * 2 + s111 * s111
    return lhs, rhs


def verify_gl3_adjoint_identity() -> IdentityReport:
    """The degree-6 identity in three variables behind the Sym^2 / adjoint comparison."""
    lhs, rhs = gl3_adjoint_sides(3)
    rep = IdentityReport("gl3-adjoint", None, 3)
    rep.checks["polynomial"] = lhs == rhs
    ones = lhs.evaluate((1, 1, 1)), rhs.evaluate((1, 1, 1))
    rep.checks["eval_ones"] = ones[0] == ones[1]
    rep.notes.append(f"value at (1,1,1): {ones[0]}")
    rep.lhs, rep.rhs = lhs, rhs
    return rep


def verify_gl4_identity(m: int) -> IdentityReport:
    """S(m) + S(1,1)S(m-2) + S(1,1,1,1)S(m-4) = S(m-1)S(1) + S(1,1,1)S(m-3) in four variables.

    At m = 3 the S(1,1,1,1) term is absent.
    """
    if m < 3:
        raise ValueError("the GL(4) family starts at m = 3")
    n = 4
    lhs = _S([m], n) + _S([1, 1], n) * _S([m - 2], n)
    lhs_lr = SchurExpansion({Partition([m]): 1}) + lr_expand([1, 1], [m - 2])
    if m >= 4:
        lhs = lhs + _S([1, 1, 1, 1], n) * _S([m - 4], n)
        lhs_lr = lhs_lr + lr_expand([1, 1, 1, 1], [m - 4])
    rhs = _S([m - 1], n) * _S([1], n) + _S([1, 1, 1], n) * _S([m - 3], n)
    rhs_lr = lr_expand([m - 1], [1]) + lr_expand([1, 1, 1], [m - 3])
    rep = IdentityReport("gl4", m, n)
    rep.checks["polynomial"] = lhs == rhs
    rep.checks["lr_restricted"] = lhs_lr.restrict(n) == rhs_lr.restrict(n)
    if m >= 5:
        dropped = Partition([m - 4, 1, 1, 1, 1])
        rep.checks["vanishing"] = _S(dropped, n).is_zero() and lhs_lr.get(dropped, 0) == 1
        rep.notes.append(f"S({format_partition(dropped)}) vanishes in 4 variables")
    elif m == 3:
        rep.notes.append("m = 3: reduced variant without the fourth exterior power")
    rep.lhs, rep.rhs = lhs_lr, rhs_lr
    return rep


FAMILIES = {
    "gl3": verify_gl3_identity,
    "gl4": verify_gl4_identity,
}
