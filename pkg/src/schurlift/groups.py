"""Finite groups by full enumeration: permutations and matrices over GF(q) or Q(zeta_N).

Groups are closed breadth-first from their generators up to a size cap, then
split into conjugacy classes with power maps. Everything is deterministic:
element order follows the closure, classes are sorted by
(element order, class size, first-seen index).
"""

from __future__ import annotations

import math
import re
import string
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .cyclotomic import Cyclotomic, parse_cyclotomic
from .finite_field import GF, field as gf_field

DEFAULT_CAP = 10_000


class GroupError(ValueError):
    pass


class GroupTooLargeError(GroupError):
    pass


class MissingPowerMapError(KeyError):
    pass


# ---------------------------------------------------------------------------
# element representations


class PermutationRep:
    """Permutations of {0..n-1} as image tuples; products compose left to right."""

    kind = "perm"

    def __init__(self, degree: int):
        self.degree = degree

    def identity(self):
        return tuple(range(self.degree))

    def mul(self, a, b):
        return tuple(b[i] for i in a)

    def inverse(self, a):
        out = [0] * len(a)
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    def describe(self) -> str:
        return f"perm {self.degree}"


class GFMatrixRep:
    kind = "gf"

    def __init__(self, dim: int, q: int):
        self.dim, self.q = dim, q
        self.F: GF = gf_field(q)

    def identity(self):
        return tuple(tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim))

    def mul(self, a, b):
        add, mul = self.F.add_table, self.F.mul_table
        d = self.dim
        cols = list(zip(*b))
        out = []
        for row in a:
            new = []
            for col in cols:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = add[acc][mul[x][y]]
                new.append(acc)
            out.append(tuple(new))
        return tuple(out)

    def inverse(self, a):
        return None

    def describe(self) -> str:
        return f"gf {self.q}"


class CycMatrixRep:
    kind = "cyc"

    def __init__(self, dim: int, N: int):
        self.dim, self.N = dim, N

    def identity(self):
        one, zero = Cyclotomic.rational(1), Cyclotomic.rational(0)
        return tuple(tuple(one if i == j else zero for j in range(self.dim)) for i in range(self.dim))

    def mul(self, a, b):
        cols = list(zip(*b))
        zero = Cyclotomic.rational(0)
        out = []
        for row in a:
            new = []
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                new.append(acc)
            out.append(tuple(new))
        return tuple(out)

    def inverse(self, a):
        return None

    def describe(self) -> str:
        return f"cyc {self.N}"


# ---------------------------------------------------------------------------
# parsing


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Cycle notation with 1-based points, commas or spaces: ``"(1,2,3)(4,5)"``, ``"(1 2)"``."""
    text = text.strip()
    cycles = []
    if text not in ("", "()"):
        pos = 0
        for m in _CYCLE.finditer(text):
            if text[pos:m.start()].strip():
                raise GroupError(f"bad cycle notation: {text!r}")
            pos = m.end()
            body = [t for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
            cyc = [int(t) - 1 for t in body]
            if any(c < 0 for c in cyc) or len(set(cyc)) != len(cyc):
                raise GroupError(f"bad cycle {m.group(0)!r}")
            cycles.append(cyc)
        if text[pos:].strip():
            raise GroupError(f"bad cycle notation: {text!r}")
    top = max((max(c) + 1 for c in cycles if c), default=0)
    n = max(top, degree or 0)
    img = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            img[a] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def format_permutation(p: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + ",".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


def parse_matrix(entries: Sequence, dim: int | None = None, *, field_tag: str) -> tuple:
    """Row-major entry list plus a field tag ``"gf q"`` or ``"cyc N"``.

    Over GF(q) nonnegative entries are field codes (base-p digits give the
    polynomial coefficients); a negative integer -k means the prime-field
    element -k mod p.
    """
    kind, _, arg = field_tag.partition(" ")
    entries = list(entries)
    if dim is None:
        dim = math.isqrt(len(entries))
    if dim * dim != len(entries):
        raise GroupError(f"{len(entries)} entries do not form a square matrix")
    if kind == "gf":
        q = int(arg)
        p = gf_field(q).p
        vals = [int(e) for e in entries]
        vals = [v % p if v < 0 else v for v in vals]
        if any(not 0 <= v < q for v in vals):
            raise GroupError(f"entries must be field codes 0..{q - 1}")
    elif kind == "cyc":
        vals = [e if isinstance(e, Cyclotomic) else parse_cyclotomic(str(e)) for e in entries]
    else:
        raise GroupError(f"unknown field tag {field_tag!r}")
    return tuple(tuple(vals[i * dim:(i + 1) * dim]) for i in range(dim))


# ---------------------------------------------------------------------------
# groups


@dataclass
class GroupData:
    rep: object
    generators: list
    elements: list
    index: dict[Hashable, int]
    name: str = ""
    _inverse: list[int] = field(default_factory=list, repr=False)
    _order_of: list[int] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        return self.rep.mul(a, b)

    def mul_index(self, i: int, j: int) -> int:
        return self.index[self.rep.mul(self.elements[i], self.elements[j])]

    def inverse_index(self, i: int) -> int:
        return self._inverse[i]

    def element_order(self, i: int) -> int:
        return self._order_of[i]

    def power_index(self, i: int, m: int) -> int:
        o = self._order_of[i]
        m %= o
        result, base = 0, i
        while m:
            if m & 1:
                result = self.mul_index(result, base)
            base = self.mul_index(base, base)
            m >>= 1
        return result

    def exponent(self) -> int:
        return math.lcm(*self._order_of)


def build_group(generators: Iterable, *, rep=None, cap: int = DEFAULT_CAP, name: str = "") -> GroupData:
    """Enumerate the group generated by ``generators`` by breadth-first closure."""
    gens = list(generators)
    if rep is None:
        rep = _infer_rep(gens)
    ident = rep.identity()
    for g in gens:
        if _shape(g) != _shape(ident):
            raise GroupError("generators have inconsistent shapes")
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = rep.mul(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise GroupTooLargeError(f"group order exceeds the cap of {cap}")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    G = GroupData(rep=rep, generators=gens, elements=elements, index=index, name=name)
    _fill_orders(G)
    return G


def _shape(x):
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        return ("mat", len(x), len(x[0]))
    return ("perm", len(x))


def _infer_rep(gens):
    if not gens:
        raise GroupError("need at least one generator (use the identity for the trivial group)")
    g = gens[0]
    if isinstance(g, tuple) and g and isinstance(g[0], tuple):
        if isinstance(g[0][0], Cyclotomic):
            N = math.lcm(*(e.N for m in gens for row in m for e in row))
            return CycMatrixRep(len(g), N)
        raise GroupError("matrix generators over GF(q) need an explicit representation")
    degree = max(len(p) for p in gens)
    return PermutationRep(degree)


def permutation_group(cycles: Iterable[str], degree: int | None = None, **kw) -> GroupData:
    perms = [parse_permutation(c) for c in cycles]
    n = max([len(p) for p in perms] + [degree or 0])
    perms = [tuple(p) + tuple(range(len(p), n)) for p in perms]
    return build_group(perms, rep=PermutationRep(n), **kw)


def matrix_group(matrices: Iterable[Sequence], field_tag: str, **kw) -> GroupData:
    mats = [parse_matrix(m, field_tag=field_tag) for m in matrices]
    kind, _, arg = field_tag.partition(" ")
    dim = len(mats[0])
    rep = GFMatrixRep(dim, int(arg)) if kind == "gf" else CycMatrixRep(dim, int(arg))
    return build_group(mats, rep=rep, **kw)


def _fill_orders(G: GroupData) -> None:
    n = len(G.elements)
    order = [0] * n
    inverse = [0] * n
    for i in range(n):
        if order[i]:
            continue
        # walk the cyclic subgroup once; powers of x share the order data
        powers = [0]
        j = i
        while j != 0:
            powers.append(j)
            j = G.mul_index(j, i)
        o = len(powers)
        for k in range(1, o):
            idx = powers[k]
            if not order[idx]:
                order[idx] = o // math.gcd(o, k)
                inverse[idx] = powers[o - k]
        order[0], inverse[0] = 1, 0
    G._order_of = order
    G._inverse = inverse


# ---------------------------------------------------------------------------
# conjugacy classes


@dataclass
class ConjClassSet:
    labels: list[str]
    sizes: list[int]
    orders: list[int]
    power_maps: dict[int, list[int]] = field(default_factory=dict)
    reps: list[int] | None = None
    class_of: list[int] | None = None
    group: GroupData | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.sizes)

    @property
    def group_order(self) -> int:
        return sum(self.sizes)

    def inverse_classes(self) -> list[int]:
        return power_map(self, -1)


def conjugacy_classes(G: GroupData) -> ConjClassSet:
    n = len(G.elements)
    gen_idx = [G.index[g] for g in G.generators]
    gen_inv = [G.inverse_index(g) for g in gen_idx]
    cls = [-1] * n
    raw: list[list[int]] = []
    for start in range(n):
        if cls[start] >= 0:
            continue
        c = len(raw)
        members = [start]
        cls[start] = c
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g, gi in zip(gen_idx, gen_inv):
                y = G.mul_index(G.mul_index(gi, x), g)
                if cls[y] < 0:
                    cls[y] = c
                    members.append(y)
                    queue.append(y)
        raw.append(members)
    order = sorted(range(len(raw)), key=lambda c: (G.element_order(raw[c][0]), len(raw[c]), min(raw[c])))
    renum = {old: new for new, old in enumerate(order)}
    class_of = [renum[c] for c in cls]
    reps = [min(raw[c]) for c in order]
    sizes = [len(raw[c]) for c in order]
    orders = [G.element_order(r) for r in reps]
    labels = _labels(orders)
    cs = ConjClassSet(labels=labels, sizes=sizes, orders=orders, reps=reps, class_of=class_of, group=G)
    cs.power_maps[1] = list(range(len(reps)))
    return cs


def _labels(orders: list[int]) -> list[str]:
    seen: dict[int, int] = {}
    out = []
    for o in orders:
        k = seen.get(o, 0)
        seen[o] = k + 1
        out.append(f"{o}{_letters(k)}")
    return out


def _letters(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = string.ascii_lowercase[r] + s
    return s


def power_map(classes: ConjClassSet, m: int) -> list[int]:
    """Class index map of g -> g^m.

    Computed groups answer directly; ingested tables compose the stored
    prime power maps.
    """
    if m in classes.power_maps:
        return classes.power_maps[m]
    if classes.group is not None:
        G = classes.group
        pm = [classes.class_of[G.power_index(r, m)] for r in classes.reps]
        classes.power_maps[m] = pm
        return pm
    r = len(classes)
    if m == 0:
        return [0] * r
    if m < 0:
        inv = classes.power_maps.get(-1)
        if inv is None:
            raise MissingPowerMapError(-1)
        return _compose(inv, power_map(classes, -m))
    result = list(range(r))
    for p in _prime_factors(m):
        pm = classes.power_maps.get(p)
        if pm is None:
            raise MissingPowerMapError(p)
        result = [pm[c] for c in result]
    return result


def _compose(f: list[int], g: list[int]) -> list[int]:
    return [f[g[c]] for c in range(len(g))]


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        while m % p == 0:
            out.append(p)
            m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def class_multiplication_coefficients(G: GroupData, classes: ConjClassSet) -> list[list[list[int]]]:
    """``a[j][i][k]`` = number of x in class j with x^-1 g_k in class i (g_k a fixed rep).

    Equivalently C_j C_i = sum_k a[j][i][k] C_k in the class algebra.
    """
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    cls = classes.class_of
    for k, gk in enumerate(classes.reps):
        g = G.elements[gk]
        for x in range(len(G.elements)):
            y = G.index[G.mul(G.elements[G.inverse_index(x)], g)]
            a[cls[x]][cls[y]][k] += 1
    return a
