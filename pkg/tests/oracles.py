"""Brute-force reference computations, deliberately independent of the library's algorithms.

Schur polynomials come from the Jacobi-Trudi determinant over complete
homogeneous polynomials; Littlewood-Richardson coefficients are read off a
full polynomial product by peeling leading monomials.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from schurlift.partitions import Partition
from schurlift.polynomial import SparsePoly


@lru_cache(maxsize=None)
def complete_h(k: int, n: int) -> SparsePoly:
    if k < 0:
        return SparsePoly.zero(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        mono = [0] * n
        for i in combo:
            mono[i] += 1
        terms[tuple(mono)] = 1
    return SparsePoly(n, terms)


def _det(matrix, n):
    size = len(matrix)
    if size == 0:
        return SparsePoly.constant(n, 1)
    total = SparsePoly.zero(n)
    for perm in itertools.permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = SparsePoly.constant(n, sign)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


@lru_cache(maxsize=None)
def jacobi_trudi(lam: tuple, n: int) -> SparsePoly:
    """det(h_{lam_i - i + j}) in n variables."""
    lam = tuple(lam)
    if len(lam) > n:
        return SparsePoly.zero(n)
    m = len(lam)
    return _det([[complete_h(lam[i] - i + j, n) for j in range(m)] for i in range(m)], n)


def lr_oracle_poly(lam, mu) -> dict[Partition, int]:
    """Coefficients of S_lam * S_mu found by repeatedly subtracting the top Schur term."""
    lam, mu = Partition(lam), Partition(mu)
    n = max(1, lam.length + mu.length)
    rest = jacobi_trudi(tuple(lam), n) * jacobi_trudi(tuple(mu), n)
    out: dict[Partition, int] = {}
    while not rest.is_zero():
        # the lexicographically largest exponent vector is a partition, the top term
        mono = max(rest.terms)
        c = rest.terms[mono]
        nu = Partition(mono)
        out[nu] = c
        rest = rest - jacobi_trudi(tuple(nu), n) * c
    return out


# ---------------------------------------------------------------------------
# dominant-monomial version: no polynomial is ever expanded


def _strips_below(lam: tuple, r: int):
    """Shapes mu inside lam with lam/mu a horizontal strip of r boxes."""
    lam = list(lam)

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(min(left, lam[i] - lower) + 1):
            yield from rec(i + 1, left - take, acc + [lam[i] - take])

    yield from rec(0, r, [])


@lru_cache(maxsize=None)
def kostka(lam: tuple, alpha: tuple) -> int:
    """Number of semistandard tableaux of shape lam and content alpha.

    The cells holding the largest letter form a horizontal strip; removing it
    gives the recursion.
    """
    if not alpha:
        return 1 if not lam else 0
    if sum(lam) != sum(alpha) or len(lam) > len(alpha):
        return 0
    *head, last = alpha
    return sum(kostka(mu, tuple(head)) for mu in _strips_below(lam, last))


def _sub_compositions(nu: tuple, weight: int):
    def rec(i, left, acc):
        if i == len(nu):
            if left == 0:
                yield tuple(acc)
            return
        for t in range(min(left, nu[i]) + 1):
            yield from rec(i + 1, left - t, acc + [t])

    yield from rec(0, weight, [])


def product_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    """Coefficient of x^nu in S_lam * S_mu (nu padded to any length)."""
    total = 0
    for alpha in _sub_compositions(nu, sum(lam)):
        a = kostka(lam, tuple(sorted(alpha, reverse=True)))
        if a:
            beta = tuple(sorted((v - u for u, v in zip(alpha, nu)), reverse=True))
            total += a * kostka(mu, beta)
    return total


def lr_oracle(lam, mu) -> dict[Partition, int]:
    """LR coefficients from dominant monomial coefficients, peeled in decreasing lex order."""
    from schurlift.partitions import partitions_of

    lam, mu = tuple(Partition(lam)), tuple(Partition(mu))
    w = sum(lam) + sum(mu)
    shapes = sorted(partitions_of(w), reverse=True)
    out: dict[Partition, int] = {}
    for nu in shapes:
        c = product_coefficient(lam, mu, tuple(nu))
        c -= sum(k * kostka(tuple(rho), tuple(nu)) for rho, k in out.items())
        if c:
            out[Partition(nu)] = c
    return out
