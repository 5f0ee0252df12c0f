"""Upper bounds on the number of irreducible summands of Sym^k for GL(3) and GL(4).

Every quantity here is an exact integer; ceilings and floors use integer
division only.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from math import comb

CASES = ("gl3", "gl4")

# small-k values established separately, keyed by (case, k)
PROPOSITION_CONSTANTS = {
    ("gl3", 2): 4,
    ("gl3", 3): 3,
    ("gl4", 3): 6,
    ("gl4", 4): 7,
}

CSV_COLUMNS = ["k", "degree", "generic_denom", "enhanced_denom", "generic", "enhanced", "effective", "source"]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _case(case: str) -> str:
    c = case.lower().replace("(", "").replace(")", "")
    if c not in CASES:
        raise ValueError(f"unknown case {case!r}; expected gl3 or gl4")
    return c


def sym_degree(n: int, k: int) -> int:
    """Dimension of Sym^k of an n-dimensional space."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n not in (3, 4):
        raise ValueError("only n = 3 and n = 4 are supported")
    return comb(n + k - 1, k)


@dataclass
class BoundsRow:
    case: str
    k: int
    degree: int
    generic_denominator: int | None
    enhanced_denominator: int | None
    generic_bound: int | None
    enhanced_bound: int | None
    effective_bound: int
    source: str

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> list:
        blank = lambda v: "" if v is None else v  # noqa: E731
        return [
            self.k,
            self.degree,
            blank(self.generic_denominator),
            blank(self.enhanced_denominator),
            blank(self.generic_bound),
            blank(self.enhanced_bound),
            self.effective_bound,
            self.source,
        ]


def proposition_constants(case: str, k: int) -> int | None:
    return PROPOSITION_CONSTANTS.get((_case(case), k))


def gl3_enhanced_applies(k: int) -> bool:
    return k % 3 == 1


def gl4_enhanced_applies(k: int) -> bool:
    return k % 8 in (3, 5, 7)


def _row(case: str, k: int, degree: int, gden, eden) -> BoundsRow:
    generic = degree // gden if gden else None
    enhanced = degree // eden if eden else None
    const = proposition_constants(case, k)
    candidates = [(b, "formula") for b in (generic, enhanced) if b is not None]
    if const is not None:
        candidates.append((const, "proposition-constant"))
    if not candidates:
        raise ValueError(f"no bound available for {case} at k={k}")
    best = min(b for b, _ in candidates)
    # prefer attributing to the formula when both agree
    source = next(s for b, s in candidates if b == best)
    return BoundsRow(case, k, degree, gden, eden, generic, enhanced, best, source)


def gl3_bounds(k: int) -> BoundsRow:
    """Generic and (for k = 1 mod 3) enhanced bounds for Sym^k on GL(3)."""
    if k < 2:
        raise ValueError("GL(3) bounds start at k = 2")
    degree = sym_degree(3, k)
    if k < 4:
        return _row("gl3", k, degree, None, None)
    gden = _ceil_div(k * (k + 1), 6)
    eden = _ceil_div(3 * k * (k + 1), 16) if gl3_enhanced_applies(k) else None
    return _row("gl3", k, degree, gden, eden)


def gl4_bounds(k: int) -> BoundsRow:
    """Generic and (for k = 3, 5, 7 mod 8) enhanced bounds for Sym^k on GL(4)."""
    if k < 3:
        raise ValueError("GL(4) bounds start at k = 3")
    degree = sym_degree(4, k)
    if k < 4:
        return _row("gl4", k, degree, None, None)
    gden = _ceil_div((k - 2) * (k - 1) * k, 24)
    eden = _ceil_div(2 * (k - 2) * (k - 1) * k, 45) if gl4_enhanced_applies(k) else None
    return _row("gl4", k, degree, gden, eden)


def bounds_row(case: str, k: int) -> BoundsRow:
    return gl3_bounds(k) if _case(case) == "gl3" else gl4_bounds(k)


def case_minimum(case: str) -> int:
    return 2 if _case(case) == "gl3" else 3


# ---------------------------------------------------------------------------
# threshold scans


@dataclass
class Claim:
    bound: int
    k_min: int
    description: str
    residues: tuple[int, ...] | None = None
    modulus: int | None = None
    extra_k: tuple[int, ...] = ()

    def applies(self, k: int) -> bool:
        if k in self.extra_k:
            return True
        if k < self.k_min:
            return False
        return self.modulus is None or k % self.modulus in self.residues


CLAIMS = {
    "gl3": [
        Claim(4, 2, "effective <= 4 for k >= 2"),
        Claim(3, 7, "effective <= 3 for k >= 7 and k = 3, 4", extra_k=(3, 4)),
        Claim(2, 19, "effective <= 2 for k >= 19 with k = 1 mod 3", residues=(1,), modulus=3),
    ],
    "gl4": [
        Claim(6, 15, "effective <= 6 for k >= 15"),
        Claim(5, 21, "effective <= 5 for k >= 21"),
        Claim(4, 39, "effective <= 4 for k >= 39"),
        Claim(3, 139, "effective <= 3 for k >= 139 with k = 3, 5, 7 mod 8", residues=(3, 5, 7), modulus=8),
    ],
}


@dataclass
class ClaimResult:
    description: str
    bound: int
    checked: int
    violations: list[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


@dataclass
class ThresholdReport:
    case: str
    k_max: int
    rows: list[BoundsRow]
    claims: list[ClaimResult]
    first_k: dict[int, int]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.claims)

    def row(self, k: int) -> BoundsRow:
        return next(r for r in self.rows if r.k == k)

    def summary(self) -> dict:
        return {
            "case": self.case,
            "k_max": self.k_max,
            "passed": self.passed,
            "claims": [
                {"claim": c.description, "checked": c.checked, "violations": c.violations, "holds": c.holds}
                for c in self.claims
            ],
            "first_k_with_effective": {str(b): k for b, k in sorted(self.first_k.items())},
        }


def threshold_scan(case: str, k_max: int) -> ThresholdReport:
    """Evaluate every k up to k_max and test each piecewise claim."""
    case = _case(case)
    claims = CLAIMS[case]
    need = max(c.k_min for c in claims)
    if k_max < need:
        raise ValueError(f"k_max must be at least {need} to reach every claimed threshold")
    rows = [bounds_row(case, k) for k in range(case_minimum(case), k_max + 1)]
    results = [ClaimResult(c.description, c.bound, 0) for c in claims]
    first: dict[int, int] = {}
    for r in rows:
        if r.source == "formula":
            first.setdefault(r.effective_bound, r.k)
        for c, res in zip(claims, results):
            if c.applies(r.k):
                res.checked += 1
                if r.effective_bound > c.bound:
                    res.violations.append(r.k)
    return ThresholdReport(case, k_max, rows, results, first)


# ---------------------------------------------------------------------------
# output


def rows_to_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_row())
    return buf.getvalue()


def rows_to_json(rows: list[BoundsRow], extra: dict | None = None) -> str:
    doc = dict(extra or {})
    doc["rows"] = [r.to_dict() for r in rows]
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def rows_to_markdown(rows: list[BoundsRow]) -> str:
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
    for r in rows:
        lines.append("| " + " | ".join(str(v) for v in r.csv_row()) + " |")
    return "\n".join(lines) + "\n"
