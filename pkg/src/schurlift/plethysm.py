"""Symmetric, exterior and adjoint powers of characters, and their decompositions.

Powers are computed from Adams operations chi(g^m) with the Newton
recursions

    k Sym^k = sum_{i=1..k} psi^i Sym^(k-i)
    k Lam^k = sum_{i=1..k} (-1)^(i-1) psi^i Lam^(k-i)

evaluated class by class in exact cyclotomic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .chartable import CharacterTable, inner
from .cyclotomic import ONE, ZERO, Cyclotomic
from .schur import IdentityReport


class DecompositionError(ValueError):
    """Non-integral or negative multiplicities: a virtual input or a corrupt table."""


class TableMismatchError(ValueError):
    pass


class ClassFunction:
    __slots__ = ("table", "values")

    def __init__(self, table: CharacterTable, values: Iterable):
        self.table = table
        self.values = tuple(Cyclotomic.coerce(v) for v in values)
        if len(self.values) != table.num_classes:
            raise ValueError(f"{len(self.values)} values for {table.num_classes} classes")

    @classmethod
    def irreducible(cls, table: CharacterTable, k: int) -> "ClassFunction":
        return cls(table, table.chi(k))

    @classmethod
    def trivial(cls, table: CharacterTable) -> "ClassFunction":
        return cls(table, [ONE] * table.num_classes)

    @classmethod
    def zero(cls, table: CharacterTable) -> "ClassFunction":
        return cls(table, [ZERO] * table.num_classes)

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def degree_int(self) -> int:
        return int(self.values[0])

    def _same(self, other: "ClassFunction") -> None:
        if other.table is not self.table:
            raise TableMismatchError("class functions live on different tables")

    def __add__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.table, [a + other for a in self.values])

    __radd__ = __add__

    def __neg__(self):
        return ClassFunction(self.table, [-a for a in self.values])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.table, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.table, [a * other for a in self.values])

    __rmul__ = __mul__

    def __truediv__(self, k):
        return ClassFunction(self.table, [a / k for a in self.values])

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.table, [a.conj() for a in self.values])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ClassFunction({[str(v) for v in self.values]})"


# ---------------------------------------------------------------------------
# power operations


def adams(chi: ClassFunction, m: int) -> ClassFunction:
    """g -> chi(g^m)."""
    if m < 1:
        raise ValueError("Adams operations need m >= 1")
    pm = chi.table.power_map(m)
    return ClassFunction(chi.table, [chi.values[pm[c]] for c in range(len(pm))])


def _newton(chi: ClassFunction, k: int, signed: bool) -> list[ClassFunction]:
    psi = [None] + [adams(chi, i) for i in range(1, k + 1)]
    out = [ClassFunction.trivial(chi.table)]
    for j in range(1, k + 1):
        acc = ClassFunction.zero(chi.table)
        for i in range(1, j + 1):
            term = psi[i] * out[j - i]
            if signed and i % 2 == 0:
                acc = acc - term
            else:
                acc = acc + term
        out.append(acc / j)
    return out


def sym_powers(chi: ClassFunction, k: int) -> list[ClassFunction]:
    """[Sym^0, ..., Sym^k] of chi."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _newton(chi, k, signed=False)


def ext_powers(chi: ClassFunction, k: int) -> list[ClassFunction]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _newton(chi, k, signed=True)


def sym_power(chi: ClassFunction, k: int) -> ClassFunction:
    return sym_powers(chi, k)[k]


def ext_power(chi: ClassFunction, k: int) -> ClassFunction:
    return ext_powers(chi, k)[k]


def determinant(chi: ClassFunction) -> ClassFunction:
    return ext_power(chi, chi.degree_int())


def adjoint(chi: ClassFunction) -> ClassFunction:
    """chi * conj(chi) - 1, of degree n^2 - 1."""
    return chi * chi.conj() - ClassFunction.trivial(chi.table)


def frobenius_schur_indicator(chi: ClassFunction) -> Fraction:
    """1 for orthogonal, -1 for symplectic, 0 for non-real irreducibles."""
    return inner_product(adams(chi, 2), ClassFunction.trivial(chi.table))


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    phi._same(psi)
    return inner(phi.table, phi.values, psi.values)


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class Decomposition:
    multiplicities: dict[int, int]
    degrees: dict[int, int]
    degree: int

    @property
    def N(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def constituents(self) -> list[int]:
        """Character numbers (1-based), repeated by multiplicity."""
        return [k for k, m in sorted(self.multiplicities.items()) for _ in range(m)]

    @property
    def constituent_degrees(self) -> list[int]:
        return sorted(self.degrees[k] for k in self.constituents)

    def is_irreducible(self) -> bool:
        return self.N == 1

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "N": self.N,
            "multiplicities": {str(k): m for k, m in sorted(self.multiplicities.items())},
            "constituents": self.constituents,
            "constituent_degrees": self.constituent_degrees,
        }


def _multiplicities(chi: ClassFunction) -> list[Fraction]:
    table = chi.table
    return [inner(table, chi.values, irr) for irr in table.irreducibles]


def decompose_virtual(chi: ClassFunction) -> dict[int, int]:
    """Signed integer multiplicities (1-based character numbers) of a virtual character."""
    mult = _multiplicities(chi)
    if any(m.denominator != 1 for m in mult):
        raise DecompositionError(f"non-integral multiplicities {[str(m) for m in mult]}")
    out = {k + 1: int(m) for k, m in enumerate(mult) if m}
    _check_reconstruction(chi, out)
    return out


def decompose(chi: ClassFunction) -> Decomposition:
    """Multiplicities of the irreducibles in an actual character, with the reconstruction asserted."""
    mult = decompose_virtual(chi)
    if any(m < 0 for m in mult.values()):
        raise DecompositionError(f"negative multiplicities {mult}: input is a virtual character")
    table = chi.table
    return Decomposition(
        multiplicities=mult,
        degrees={k: table.degrees[k - 1] for k in mult},
        degree=chi.degree_int(),
    )


def _check_reconstruction(chi: ClassFunction, mult: dict[int, int]) -> None:
    acc = ClassFunction.zero(chi.table)
    for k, m in mult.items():
        acc = acc + ClassFunction.irreducible(chi.table, k) * m
    if acc != chi:
        raise DecompositionError("irreducible combination does not reproduce the class function")


def combination(table: CharacterTable, mult: dict[int, int]) -> ClassFunction:
    acc = ClassFunction.zero(table)
    for k, m in mult.items():
        acc = acc + ClassFunction.irreducible(table, k) * m
    return acc


# ---------------------------------------------------------------------------
# identities and structural checks


def character_identity_sides(chi: ClassFunction, m: int, case: str) -> tuple[ClassFunction, ClassFunction]:
    n = 3 if case == "gl3" else 4
    sym = sym_powers(chi, m)
    lam = ext_powers(chi, n)
    if case == "gl3":
        lhs = sym[m - 1] * chi + sym[m - 3] * lam[3]
        rhs = sym[m] + sym[m - 2] * lam[2]
    else:
        lhs = sym[m] + sym[m - 2] * lam[2]
        if m >= 4:
            lhs = lhs + sym[m - 4] * lam[4]
        rhs = sym[m - 1] * chi + sym[m - 3] * lam[3]
    return lhs, rhs


def verify_character_identity(chi: ClassFunction, m: int, case: str) -> IdentityReport:
    """Pointwise check of the GL(3) or GL(4) symmetric-power identity on a character."""
    case = case.lower()
    if case not in ("gl3", "gl4"):
        raise ValueError(f"unknown case {case!r}")
    n = 3 if case == "gl3" else 4
    if chi.degree != n:
        raise ValueError(f"{case} needs a character of degree {n}, got {chi.degree}")
    if m < 3:
        raise ValueError("m must be at least 3")
    lhs, rhs = character_identity_sides(chi, m, case)
    rep = IdentityReport(f"{case}-character", m, n)
    rep.checks["pointwise"] = lhs == rhs
    rep.checks["degree"] = lhs.degree == rhs.degree
    rep.lhs = [str(v) for v in lhs.values]
    rep.rhs = [str(v) for v in rhs.values]
    return rep


def koszul_sum(chi: ClassFunction, k: int) -> ClassFunction:
    """sum_{i+j=k} (-1)^i Lam^i Sym^j; zero for every k >= 1."""
    sym = sym_powers(chi, k)
    lam = ext_powers(chi, k)
    acc = ClassFunction.zero(chi.table)
    for i in range(k + 1):
        term = lam[i] * sym[k - i]
        acc = acc - term if i % 2 else acc + term
    return acc


@dataclass
class AdjointLinkReport:
    sym2_norm: Fraction
    adjoint_norm: Fraction
    sym2: Decomposition
    adjoint: Decomposition

    @property
    def sym2_irreducible(self) -> bool:
        return self.sym2_norm == 1

    @property
    def adjoint_irreducible(self) -> bool:
        return self.adjoint_norm == 1

    @property
    def holds(self) -> bool:
        return self.sym2_irreducible == self.adjoint_irreducible

    def to_json(self) -> dict:
        return {
            "sym2_norm": str(self.sym2_norm),
            "adjoint_norm": str(self.adjoint_norm),
            "sym2_irreducible": self.sym2_irreducible,
            "adjoint_irreducible": self.adjoint_irreducible,
            "sym2": self.sym2.to_json(),
            "adjoint": self.adjoint.to_json(),
            "biconditional_holds": self.holds,
        }


def adjoint_link_check(chi: ClassFunction) -> AdjointLinkReport:
    """Compare irreducibility of Sym^2 and of the adjoint for a 3-dimensional character."""
    if chi.degree != 3:
        raise ValueError("the adjoint link is stated for 3-dimensional characters")
    s2 = sym_power(chi, 2)
    ad = adjoint(chi)
    return AdjointLinkReport(
        sym2_norm=inner_product(s2, s2),
        adjoint_norm=inner_product(ad, ad),
        sym2=decompose(s2),
        adjoint=decompose(ad),
    )


def linear_characters(table: CharacterTable) -> list[int]:
    return [k for k, d in enumerate(table.degrees, start=1) if d == 1]


@dataclass
class SelfTwists:
    S: list[int] = field(default_factory=list)
    T: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"S": self.S, "T": self.T, "size_S": len(self.S), "size_T": len(self.T)}


def self_twists(chi: ClassFunction) -> SelfTwists:
    """Linear characters mu with chi*mu = chi (S) and with chi*mu = conj(chi) (T)."""
    table = chi.table
    out = SelfTwists()
    bar = chi.conj()
    for k in linear_characters(table):
        twisted = chi * ClassFunction.irreducible(table, k)
        if twisted == chi:
            out.S.append(k)
        if twisted == bar:
            out.T.append(k)
    return out


def character_power(mu: ClassFunction, e: int) -> ClassFunction:
    out = ClassFunction.trivial(mu.table)
    for _ in range(e):
        out = out * mu
    return out


def sym_degree_formula(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def ext_degree_formula(n: int, k: int) -> int:
    return comb(n, k)


def restrict_to(values: Sequence, table: CharacterTable) -> ClassFunction:
    return ClassFunction(table, values)
