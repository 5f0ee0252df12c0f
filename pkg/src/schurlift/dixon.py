"""Character tables from group elements (Burnside-Dixon-Schneider).

The class-multiplication matrices are simultaneously diagonalised over GF(p)
with p = 1 mod exponent(G) and p > 2 sqrt|G|. Each common eigenvector gives a
character modulo p; eigenvalue multiplicities of rho(g), recovered by a
discrete Fourier transform over the powers of g, lift it to exact cyclotomic
values.
"""

from __future__ import annotations

import math

from .chartable import CharacterTable, check_table
from .cyclotomic import Cyclotomic, _power_table, euler_phi
from .groups import GroupData, class_multiplication_coefficients, conjugacy_classes, power_map


class DixonError(RuntimeError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_primes(order: int, exponent: int, limit: int = 10**7):
    """Primes p = 1 (mod exponent) with p > 2 sqrt(order), in increasing order."""
    lower = 2 * math.isqrt(order) + 1
    p = (lower // exponent) * exponent + 1
    while p <= lower:
        p += exponent
    while p < limit:
        if _is_prime(p):
            yield p
        p += exponent


def _primitive_root(p: int) -> int:
    factors = {q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)}
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


# ---------------------------------------------------------------------------
# linear algebra mod p


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    lead = 0
    ncols = len(rows[0]) if rows else 0
    out = []
    for col in range(ncols):
        piv = next((i for i in range(lead, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = pow(rows[lead][col], p - 2, p)
        rows[lead] = [(x * inv) % p for x in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    out = rows[:lead]
    return out, pivots


def _nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat[0])
    red, pivots = _rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def _charpoly(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial mod p (lowest degree first) via Hessenberg reduction."""
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] % p), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(H[m][m - 1], p - 2, p)
        for i in range(m + 1, n):
            f = (H[i][m - 1] * inv) % p
            if f:
                H[i] = [(x - f * y) % p for x, y in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + f * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        # p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im * prod_{k=i+1..m} h_{k,k-1} * p_{i-1}
        prev = polys[m - 1]
        cur = [0] + prev
        h = H[m - 1][m - 1]
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - h * c) % p
        t = 1
        for i in range(m - 1, 0, -1):
            t = (t * H[i][i - 1]) % p
            coef = (H[i - 1][m - 1] * t) % p
            if coef:
                for k, c in enumerate(polys[i - 1]):
                    cur[k] = (cur[k] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _roots(poly: list[int], p: int) -> list[int]:
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def _split(spaces, M, p):
    """Split each invariant subspace (RREF basis rows) into eigenspaces of M."""
    r = len(M)
    out = []
    for basis, pivots in spaces:
        d = len(basis)
        if d == 1:
            out.append((basis, pivots))
            continue
        images = [[sum(M[i][k] * b[k] for k in range(r)) % p for i in range(r)] for b in basis]
        # column t of A = coordinates of M b_t, read off at the pivot columns
        A = [[images[t][pivots[s]] for t in range(d)] for s in range(d)]
        roots = _roots(_charpoly(A, p), p)
        pieces = []
        for lam in roots:
            shifted = [[(A[s][t] - (lam if s == t else 0)) % p for t in range(d)] for s in range(d)]
            for coords in _nullspace(shifted, p):
                pieces.append((lam, [sum(c * b[k] for c, b in zip(coords, basis)) % p for k in range(r)]))
        if sum(1 for _ in pieces) != d:
            raise DixonError("class matrix is not diagonalisable over GF(p)")
        by_value: dict[int, list[list[int]]] = {}
        for lam, v in pieces:
            by_value.setdefault(lam, []).append(v)
        for vecs in by_value.values():
            red, piv = _rref(vecs, p)
            out.append((red, piv))
    return out


# ---------------------------------------------------------------------------


def character_table(G: GroupData, name: str | None = None, classes=None) -> CharacterTable:
    """The full irreducible character table of G, checked exactly before returning."""
    cs = classes if classes is not None else conjugacy_classes(G)
    r = len(cs)
    order = G.order
    exponent = G.exponent()
    coeffs = class_multiplication_coefficients(G, cs)
    inv = power_map(cs, -1)
    # power maps needed by the Fourier lift
    for k in range(2, max(cs.orders) + 1):
        power_map(cs, k)
    last_error = None
    for attempt, p in enumerate(dixon_primes(order, exponent)):
        if attempt >= 5:
            break
        try:
            chars = _dixon_mod_p(coeffs, cs, inv, order, exponent, p)
        except DixonError as exc:
            last_error = exc
            continue
        table = CharacterTable(
            name=name if name is not None else G.name,
            classes=cs,
            irreducibles=chars,
            provenance={"kind": "computed", "note": f"Dixon-Schneider over GF({p}) from {G.rep.describe()} generators"},
        )
        check_table(table)
        return table
    raise DixonError(f"no suitable prime found ({last_error})")


def _dixon_mod_p(coeffs, cs, inv, order, exponent, p) -> list[list[Cyclotomic]]:
    r = len(cs)
    spaces = [([[int(i == j) for j in range(r)] for i in range(r)], list(range(r)))]
    for j in range(1, r):
        if all(len(b) == 1 for b, _ in spaces):
            break
        M = [[coeffs[j][i][k] % p for k in range(r)] for i in range(r)]
        spaces = _split(spaces, M, p)
    if len(spaces) != r or any(len(b) != 1 for b, _ in spaces):
        raise DixonError(f"class matrices do not separate the characters mod {p}")

    g = _primitive_root(p)
    zeta_e = pow(g, (p - 1) // exponent, p)
    chars = []
    for basis, _ in spaces:
        v = basis[0]
        if v[0] == 0:
            raise DixonError("eigenvector vanishes at the identity class")
        s = pow(v[0], p - 2, p)
        w = [(x * s) % p for x in v]
        total = sum(w[i] * w[inv[i]] * pow(cs.sizes[i], p - 2, p) for i in range(r)) % p
        d2 = (order * pow(total, p - 2, p)) % p
        deg = next((d for d in range(1, math.isqrt(order) + 1) if (d * d) % p == d2 and order % d == 0), None)
        if deg is None:
            raise DixonError("no integral degree matches the eigenvector")
        mod_vals = [(deg * w[i] * pow(cs.sizes[i], p - 2, p)) % p for i in range(r)]
        chars.append(_lift(mod_vals, cs, deg, exponent, zeta_e, p))
    trivial = [Cyclotomic.rational(1)] * r
    rest = [c for c in chars if c != trivial]
    if len(rest) != r - 1:
        raise DixonError("trivial character not found exactly once")
    rest.sort(key=lambda chi: (int(chi[0]), [v.sort_key() for v in chi]))
    return [trivial] + rest


def _lift(mod_vals, cs, deg, exponent, zeta_e, p) -> list[Cyclotomic]:
    out = []
    for i in range(len(cs)):
        o = cs.orders[i]
        z = pow(zeta_e, exponent // o, p)
        z_inv = pow(z, p - 2, p)
        seq = [mod_vals[power_map(cs, k)[i]] for k in range(o)]
        o_inv = pow(o, p - 2, p)
        table = _power_table(o)
        num = [0] * euler_phi(o)
        total_mult = 0
        for ell in range(o):
            step = pow(z_inv, ell, p)
            acc, f = 0, 1
            for val in seq:
                acc = (acc + val * f) % p
                f = (f * step) % p
            mult = (acc * o_inv) % p
            if mult > deg:
                raise DixonError("eigenvalue multiplicity out of range; prime too small")
            total_mult += mult
            if mult:
                for k, t in enumerate(table[ell]):
                    num[k] += mult * t
        if total_mult != deg:
            raise DixonError("eigenvalue multiplicities do not sum to the degree")
        out.append(Cyclotomic(o, num))
    return out
