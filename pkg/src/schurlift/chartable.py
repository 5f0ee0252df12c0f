"""Character tables: the data type, exact validation, and the ``.tbl`` file format.

A ``.tbl`` file is a JSON document::

    {
      "group_name": "A4",
      "order": 12,
      "provenance": {"kind": "computed", "note": "..."},
      "classes": [{"label": "1a", "element_order": 1, "size": 1}, ...],
      "power_maps": {"2": [1, 3, 2, 1], "3": [...]},
      "irreducibles": [["1", "1", "1", "1"], ["3", "0", "0", "-1"], ...]
    }

Power maps list, for each class position, the position of the class of
g^p; positions are 1-based like the character numbering. Character values
use the ``E(N)`` syntax of :mod:`schurlift.cyclotomic`; ``"."`` is accepted
for zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cyclotomic import ONE, ZERO, Cyclotomic, format_cyclotomic, parse_cyclotomic
from .groups import ConjClassSet, MissingPowerMapError, power_map


class TableError(ValueError):
    """Base class for rejected character tables."""

    kind = "invalid"

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


class TableParseError(TableError):
    kind = "parse"


class OrthogonalityError(TableError):
    kind = "orthogonality"


class PowerMapError(TableError):
    kind = "power_map"


@dataclass
class CharacterTable:
    name: str
    classes: ConjClassSet
    irreducibles: list[list[Cyclotomic]]
    provenance: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.classes.group_order

    @property
    def degrees(self) -> list[int]:
        return [int(chi[0]) for chi in self.irreducibles]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.irreducibles)

    def chi(self, k: int) -> "list[Cyclotomic]":
        """The k-th irreducible, numbered from 1 as in printed tables."""
        if not 1 <= k <= len(self.irreducibles):
            raise IndexError(f"character number {k} out of range 1..{len(self.irreducibles)}")
        return self.irreducibles[k - 1]

    def class_index(self, label: str) -> int:
        return self.classes.labels.index(label)

    def inverse_classes(self) -> list[int]:
        return power_map(self.classes, -1)

    def power_map(self, m: int) -> list[int]:
        """Class map of g -> g^m.

        Primes missing from an ingested table are recovered from the Galois
        action on the character values when they do not divide the group
        order; otherwise :class:`MissingPowerMapError` propagates.
        """
        try:
            return power_map(self.classes, m)
        except MissingPowerMapError as exc:
            p = exc.args[0]
            if p < 2 or self.order % p == 0:
                raise
            self.classes.power_maps[p] = _galois_power_map(self, p)
            return self.power_map(m)


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def fail(self, name: str, msg: str) -> None:
        self.checks[name] = False
        self.messages.append(msg)


def inner(table: CharacterTable, phi: Sequence[Cyclotomic], psi: Sequence[Cyclotomic]) -> Fraction:
    total = ZERO
    for size, a, b in zip(table.classes.sizes, phi, psi):
        if a and b:
            total = total + a * b.conj() * size
    return (total / table.order).to_fraction()


def validate_table(table: CharacterTable) -> ValidationReport:
    """Row and column orthogonality, degree sum, trivial-first, and power-map coherence."""
    rep = ValidationReport()
    cs = table.classes
    r = len(cs)
    chars = table.irreducibles
    rep.checks["shape"] = len(chars) == r and all(len(c) == r for c in chars)
    if not rep.checks["shape"]:
        rep.messages.append(f"{len(chars)} characters for {r} classes")
        return rep
    rep.checks["class_sizes"] = sum(cs.sizes) == table.order and all(table.order % s == 0 for s in cs.sizes)
    rep.checks["trivial_first"] = all(v == ONE for v in chars[0]) and cs.orders[0] == 1 and cs.sizes[0] == 1
    degs = [chars[i][0] for i in range(r)]
    if all(d.is_integer() and int(d) > 0 for d in degs):
        rep.checks["degree_sum"] = sum(int(d) ** 2 for d in degs) == table.order
    else:
        rep.fail("degree_sum", "degrees are not positive integers")

    rep.checks["rows"] = True
    for i in range(r):
        for j in range(i, r):
            v = inner(table, chars[i], chars[j])
            if v != (1 if i == j else 0):
                rep.fail("rows", f"<chi_{i + 1}, chi_{j + 1}> = {v}")
    rep.checks["columns"] = True
    conj = [[v.conj() for v in chi] for chi in chars]
    for a in range(r):
        for b in range(a, r):
            s = ZERO
            for i in range(r):
                x, y = chars[i][a], conj[i][b]
                if x and y:
                    s = s + x * y
            expected = Fraction(table.order, cs.sizes[a]) if a == b else 0
            if s != expected:
                rep.fail("columns", f"column sum for classes {cs.labels[a]}, {cs.labels[b]} is {s}")

    rep.checks["power_maps"] = True
    for p, pm in sorted(cs.power_maps.items()):
        if p < 2:
            continue
        if len(pm) != r or any(not 0 <= c < r for c in pm):
            rep.fail("power_maps", f"power map {p} has wrong shape")
            continue
        for c in range(r):
            o = cs.orders[c]
            if cs.orders[pm[c]] != o // math.gcd(o, p):
                rep.fail("power_maps", f"order of ({cs.labels[c]})^{p} is inconsistent")
                continue
            if math.gcd(o, p) == 1:
                for i, chi in enumerate(chars):
                    if chi[pm[c]] != chi[c].galois(p):
                        rep.fail(
                            "power_maps",
                            f"chi_{i + 1} at ({cs.labels[c]})^{p} is not the Galois image under zeta -> zeta^{p}",
                        )
                        break
    return rep


def check_table(table: CharacterTable) -> ValidationReport:
    """Validate and raise the error class matching the first failing check group."""
    rep = validate_table(table)
    if rep.ok:
        return rep
    failed = [k for k, v in rep.checks.items() if not v]
    msg = "; ".join(rep.messages) or ", ".join(failed)
    if any(k in failed for k in ("shape", "class_sizes", "trivial_first", "degree_sum", "rows", "columns")):
        raise OrthogonalityError(msg, rep)
    raise PowerMapError(msg, rep)


# ---------------------------------------------------------------------------
# file format


def table_to_dict(table: CharacterTable, primes: Sequence[int] | None = None) -> dict:
    cs = table.classes
    if primes is None:
        primes = sorted(p for p in cs.power_maps if p >= 2)
    return {
        "group_name": table.name,
        "order": table.order,
        "provenance": table.provenance,
        "classes": [
            {"label": lab, "element_order": o, "size": s} for lab, o, s in zip(cs.labels, cs.orders, cs.sizes)
        ],
        "power_maps": {str(p): [c + 1 for c in power_map(cs, p)] for p in primes},
        "irreducibles": [[format_cyclotomic(v) for v in chi] for chi in table.irreducibles],
    }


def dumps_table(table: CharacterTable, primes: Sequence[int] | None = None) -> str:
    d = table_to_dict(table, primes)
    # one character per line keeps fixtures diffable
    lines = ["{"]
    keys = ["group_name", "order", "provenance", "classes", "power_maps", "irreducibles"]
    for n, key in enumerate(keys):
        end = "," if n < len(keys) - 1 else ""
        val = d[key]
        if key in ("classes", "irreducibles"):
            inner_lines = [f"    {json.dumps(x)}" for x in val]
            lines.append(f'  "{key}": [\n' + ",\n".join(inner_lines) + f"\n  ]{end}")
        elif key == "power_maps":
            inner_lines = [f'    "{p}": {json.dumps(v)}' for p, v in val.items()]
            lines.append(f'  "{key}": {{\n' + ",\n".join(inner_lines) + f"\n  }}{end}")
        else:
            lines.append(f'  "{key}": {json.dumps(val)}{end}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_table(table: CharacterTable, path, primes: Sequence[int] | None = None) -> None:
    Path(path).write_text(dumps_table(table, primes))


def table_from_dict(d: dict, *, validate: bool = True) -> CharacterTable:
    try:
        classes = d["classes"]
        labels = [str(c["label"]) for c in classes]
        orders = [int(c["element_order"]) for c in classes]
        sizes = [int(c["size"]) for c in classes]
        r = len(classes)
        pms: dict[int, list[int]] = {1: list(range(r))}
        for p, lst in d.get("power_maps", {}).items():
            pms[int(p)] = [int(c) - 1 for c in lst]
        irr = [[parse_cyclotomic(str(v)) for v in row] for row in d["irreducibles"]]
        name = str(d.get("group_name", ""))
        order = int(d["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise TableParseError(f"malformed character table: {exc}") from exc
    if sum(sizes) != order:
        raise TableParseError(f"class sizes sum to {sum(sizes)}, not the stated order {order}")
    cs = ConjClassSet(labels=labels, sizes=sizes, orders=orders, power_maps=pms)
    table = CharacterTable(name=name, classes=cs, irreducibles=irr, provenance=dict(d.get("provenance", {})))
    if validate:
        check_table(table)
    cs.power_maps[-1] = _inverse_from_values(table)
    return table


def _galois_power_map(table: CharacterTable, p: int) -> list[int]:
    cols = {tuple(chi[c] for chi in table.irreducibles): c for c in range(table.num_classes)}
    out = []
    for c in range(table.num_classes):
        key = tuple(chi[c].galois(p) for chi in table.irreducibles)
        if key not in cols:
            raise PowerMapError(f"no class matches the Galois image of {table.classes.labels[c]} under {p}")
        out.append(cols[key])
    return out


def _inverse_from_values(table: CharacterTable) -> list[int]:
    cols = {tuple(chi[c] for chi in table.irreducibles): c for c in range(table.num_classes)}
    out = []
    for c in range(table.num_classes):
        key = tuple(chi[c].conj() for chi in table.irreducibles)
        if key not in cols:
            raise PowerMapError(f"no inverse class for {table.classes.labels[c]}")
        out.append(cols[key])
    return out


def loads_table(text: str, *, validate: bool = True) -> CharacterTable:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableParseError(f"not a JSON document: {exc}") from exc
    return table_from_dict(d, validate=validate)


def load_character_table(source, *, validate: bool = True) -> CharacterTable:
    """Read a ``.tbl`` file (path) and validate it; raises a :class:`TableError` subclass."""
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise TableParseError(f"cannot read {source}: {exc}") from exc
    return loads_table(text, validate=validate)
