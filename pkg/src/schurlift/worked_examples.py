"""Re-derive the worked finite-group examples from the bundled character tables.

Each claim becomes one :class:`ClaimLine`. Required groups must have a
fixture; the optional SmallGroup examples are checked only when a matching
``.tbl`` file has been dropped into the fixture directory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .chartable import CharacterTable, TableError, load_character_table
from .fixtures import FixtureNotFoundError, fixture_root
from .plethysm import ClassFunction, decompose, frobenius_schur_indicator, sym_power
from .printed import V1080_CLASSES, v1080_rows

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class ClaimLine:
    group: str
    claim: str
    status: str
    detail: str = ""

    def __str__(self) -> str:
        tail = f"  [{self.detail}]" if self.detail else ""
        return f"{self.status:<7} {self.group:<8} {self.claim}{tail}"

    def to_dict(self) -> dict:
        return {"group": self.group, "claim": self.claim, "status": self.status, "detail": self.detail}


@dataclass
class WorkedExamplesReport:
    lines: list[ClaimLine] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(line.status != FAIL for line in self.lines)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_text(self) -> str:
        return "\n".join(str(line) for line in self.lines) + "\n"

    def to_dict(self) -> dict:
        counts = {s: sum(1 for line in self.lines if line.status == s) for s in (PASS, FAIL, SKIPPED)}
        return {"passed": self.passed, "counts": counts, "claims": [line.to_dict() for line in self.lines]}


def faithful_characters(table: CharacterTable, degree: int) -> list[int]:
    """Irreducibles of the given degree whose kernel is trivial."""
    out = []
    for k, chi in enumerate(table.irreducibles, start=1):
        if int(chi[0]) != degree:
            continue
        if all(chi[c] != chi[0] for c in range(1, table.num_classes)):
            out.append(k)
    return out


def _sym_degrees(table, k, m):
    return decompose(sym_power(ClassFunction.irreducible(table, k), m)).constituent_degrees


def _sym_constituents(table, k, m):
    return decompose(sym_power(ClassFunction.irreducible(table, k), m)).constituents


def _claim(group: str, text: str, check: Callable[[], tuple[bool, str]]) -> ClaimLine:
    try:
        ok, detail = check()
    except Exception as exc:  # a broken table is a failed claim, not a crash
        return ClaimLine(group, text, FAIL, f"{type(exc).__name__}: {exc}")
    return ClaimLine(group, text, PASS if ok else FAIL, detail)


# ---------------------------------------------------------------------------
# required groups


def _a4(t: CharacterTable) -> list[ClaimLine]:
    def one():
        chars = faithful_characters(t, 3)
        degs = [_sym_degrees(t, k, 2) for k in chars]
        return len(chars) == 1 and degs == [[1, 1, 1, 3]], f"faithful 3-dim {chars}, Sym^2 degrees {degs}"

    return [_claim("A4", "one faithful 3-dim rho; Sym^2(rho) = 1+1+1+3, N = 4", one)]


def _s4(t: CharacterTable) -> list[ClaimLine]:
    def two():
        chars = faithful_characters(t, 3)
        degs = [_sym_degrees(t, k, 2) for k in chars]
        return len(chars) == 2 and all(d == [1, 2, 3] for d in degs), f"faithful 3-dim {chars}, Sym^2 degrees {degs}"

    def twist():
        a, b = faithful_characters(t, 3)
        quad = [k for k, d in enumerate(t.degrees, 1) if d == 1 and k != 1]
        ok = any(
            ClassFunction.irreducible(t, a) * ClassFunction.irreducible(t, q) == ClassFunction.irreducible(t, b)
            for q in quad
        )
        return ok, "rho_2 = rho_1 * sign" if ok else "no quadratic twist found"

    return [
        _claim("S4", "two faithful 3-dim rho_j; Sym^2(rho_j) = 1+2+3, N = 3", two),
        _claim("S4", "the two 3-dim characters differ by a quadratic twist", twist),
    ]


def _psl27(t: CharacterTable) -> list[ClaimLine]:
    def sym2():
        chars = faithful_characters(t, 3)
        cons = [_sym_constituents(t, k, 2) for k in chars]
        ok = len(chars) == 2 and all(len(c) == 1 for c in cons) and cons[0] == cons[1]
        return ok, f"faithful 3-dim {chars}, Sym^2 constituents {cons}"

    def sym3():
        degs = [_sym_degrees(t, k, 3) for k in faithful_characters(t, 3)]
        return all(d == [3, 7] for d in degs), f"Sym^3 degrees {degs}"

    return [
        _claim("PSL(2,7)", "exactly two faithful 3-dim rho; Sym^2(rho) irreducible and equal", sym2),
        _claim("PSL(2,7)", "Sym^3(rho) = 3-dim + 7-dim, N = 2", sym3),
    ]


def _sl29(t: CharacterTable) -> list[ClaimLine]:
    def sym2():
        chars = faithful_characters(t, 4)
        cons = [_sym_constituents(t, k, 2) for k in chars]
        # three 10-dim characters are real-valued; only one has an orthogonal model
        self_dual_10 = [
            k
            for k, d in enumerate(t.degrees, 1)
            if d == 10 and frobenius_schur_indicator(ClassFunction.irreducible(t, k)) == 1
        ]
        ok = len(chars) == 2 and len(self_dual_10) == 1 and all(c == self_dual_10 for c in cons)
        return ok, f"faithful 4-dim {chars}, Sym^2 constituents {cons}, orthogonal 10-dim {self_dual_10}"

    def sym3():
        degs = [_sym_degrees(t, k, 3) for k in faithful_characters(t, 4)]
        return all(d == [10, 10] for d in degs), f"Sym^3 degrees {degs}"

    return [
        _claim("SL(2,9)", "two faithful 4-dim rho; Sym^2(rho) = the unique orthogonal 10-dim irreducible", sym2),
        _claim("SL(2,9)", "Sym^3(rho) = two 10-dim irreducibles, N = 2", sym3),
    ]


def _v1080(t: CharacterTable) -> list[ClaimLine]:
    def rows():
        printed = v1080_rows()
        labels_ok = t.classes.labels == V1080_CLASSES
        bad = [k for k, row in printed.items() if list(t.chi(k)) != row]
        return labels_ok and not bad, f"{len(printed) - len(bad)}/{len(printed)} printed rows agree"

    def sym(m, expected):
        def check():
            got = {j: _sym_constituents(t, j, m) for j in expected}
            return got == expected, f"{got}"

        return check

    return [
        _claim("V1080", "four faithful 3-dim characters chi_2..chi_5", lambda: (faithful_characters(t, 3) == [2, 3, 4, 5], "")),
        _claim("V1080", "printed rows chi_2-5, 8, 9, 12-17 match exactly", rows),
        _claim("V1080", "Sym^2(chi_2) = Sym^2(chi_3) = chi_9, Sym^2(chi_4) = Sym^2(chi_5) = chi_8",
               sym(2, {2: [9], 3: [9], 4: [8], 5: [8]})),
        _claim("V1080", "Sym^3(chi_j) = chi_15 for j = 2..5", sym(3, {j: [15] for j in (2, 3, 4, 5)})),
        _claim("V1080", "Sym^4(chi_2) = Sym^4(chi_3) = chi_8 + chi_13, Sym^4(chi_4) = Sym^4(chi_5) = chi_9 + chi_14, N = 2",
               sym(4, {2: [8, 13], 3: [8, 13], 4: [9, 14], 5: [9, 14]})),
    ]


REQUIRED = [
    ("a4", _a4),
    ("s4", _s4),
    ("psl27", _psl27),
    ("sl29", _sl29),
    ("v1080", _v1080),
]


# ---------------------------------------------------------------------------
# optional groups: (file stem, display name, dimension, {m: expected constituent degrees or "irr"})

OPTIONAL = [
    ("g648_531", "[648,531]", 3, {2: "irr", 3: [2, 8]}),
    ("g648_532", "[648,532]", 3, {2: "irr", 3: [2, 8]}),
    ("g648_533", "[648,533]", 3, {2: "irr", 3: [2, 8]}),
    ("g216_88", "[216,88]", 3, {2: "irr", 3: [2, 8]}),
    ("g432_239", "[432,239]", 3, {2: "irr", 3: [2, 8]}),
    ("g640_21454", "[640,21454]", 4, {2: "irr", 3: [4, 16]}),
    ("g640_21455", "[640,21455]", 4, {2: "irr", 3: [4, 16]}),
    ("g1440_4591", "[1440,4591]", 4, {2: "irr", 3: "irr", 4: [5, 5, 9, 16]}),
]


def _optional_claims(t: CharacterTable, name: str, dim: int, expect: dict) -> list[ClaimLine]:
    out = []
    for m, want in sorted(expect.items()):
        text = f"faithful {dim}-dim rho: Sym^{m}(rho) " + ("irreducible" if want == "irr" else f"degrees {want}")

        def check(m=m, want=want):
            chars = faithful_characters(t, dim)
            degs = [_sym_degrees(t, k, m) for k in chars]
            if want == "irr":
                ok = bool(chars) and all(len(d) == 1 for d in degs)
            else:
                ok = bool(chars) and all(d == want for d in degs)
            return ok, f"characters {chars}, degrees {degs}"

        out.append(_claim(name, text, check))
    return out


def reproduce_worked_examples(root=None) -> WorkedExamplesReport:
    """Check every claim; raises :class:`FixtureNotFoundError` if a required table is absent."""
    root = Path(root) if root is not None else fixture_root()
    report = WorkedExamplesReport()
    tables: dict[str, CharacterTable | Exception] = {}
    for stem, _ in REQUIRED:
        path = root / f"{stem}.tbl"
        if not path.is_file():
            raise FixtureNotFoundError(f"required fixture {path} is missing")
        try:
            tables[stem] = load_character_table(path)
        except TableError as exc:
            tables[stem] = exc
    for stem, claims in REQUIRED:
        t = tables[stem]
        if isinstance(t, Exception):
            report.lines.append(ClaimLine(stem, "table loads and validates", FAIL, f"{t.kind}: {t}"))
            continue
        report.lines.extend(claims(t))
    for stem, name, dim, expect in OPTIONAL:
        path = root / f"{stem}.tbl"
        if not path.is_file():
            report.lines.append(ClaimLine(name, "optional fixture", SKIPPED, f"{stem}.tbl not present"))
            continue
        try:
            t = load_character_table(path)
        except TableError as exc:
            report.lines.append(ClaimLine(name, "table loads and validates", FAIL, f"{exc.kind}: {exc}"))
            continue
        report.lines.extend(_optional_claims(t, name, dim, expect))
    return report
