"""Published character values of the Valentiner group, kept as data.

The rows use the class labels and character numbering of the GAP library
table of SmallGroup(1080,260). Values are written with the shorthands

    a  = (1 + sqrt(-3))/2        A = conj(a)
    b  = (1 - sqrt(5))/2         B = (1 + sqrt(5))/2
    g  = -e(7/15) - e(13/15)     G = conj(g)
    d  = -e(1/15) - e(4/15)      D = conj(d)

with an optional integer coefficient in front (``-3a``) and ``.`` for zero.
"""

from __future__ import annotations

import re

from .cyclotomic import Cyclotomic, E

V1080_CLASSES = "1a 3a 3b 2a 6a 6b 3c 3d 12a 12b 4a 5a 15a 15b 15c 5b 15d".split()

V1080_ROWS = {
    2: "3 -3a -3A -1 a A . . -a -A 1 b g G D B d",
    3: "3 -3a -3A -1 a A . . -a -A 1 B d D G b g",
    4: "3 -3A -3a -1 A a . . -A -a 1 b G g d B D",
    5: "3 -3A -3a -1 A a . . -A -a 1 B D d g b G",
    8: "6 -6a -6A 2 -2a -2A . . . . . 1 -a -A -A 1 -a",
    9: "6 -6A -6a 2 -2A -2a . . . . . 1 -A -a -a 1 -A",
    12: "9 9 9 1 1 1 . . 1 1 1 -1 -1 -1 -1 -1 -1",
    13: "9 -9a -9A 1 -a -A . . -a -A 1 -1 a A A -1 a",
    14: "9 -9A -9a 1 -A -a . . -A -a 1 -1 A a a -1 A",
    15: "10 10 10 -2 -2 -2 1 1 . . . . . . . . .",
    16: "15 -15a -15A -1 a A . . a A -1 . . . . . .",
    17: "15 -15A -15a -1 A a . . A a -1 . . . . . .",
}


def _symbols() -> dict[str, Cyclotomic]:
    a = -E(3) ** 2
    b = -E(5) - E(5) ** 4
    g = -E(15) ** 7 - E(15) ** 13
    d = -E(15) - E(15) ** 4
    return {
        "a": a,
        "A": a.conj(),
        "b": b,
        "B": -E(5) ** 2 - E(5) ** 3,
        "g": g,
        "G": g.conj(),
        "d": d,
        "D": d.conj(),
    }


_TOKEN = re.compile(r"^(-?)(\d*)([aAbBgGdD]?)$")


def parse_entry(token: str) -> Cyclotomic:
    if token == ".":
        return Cyclotomic.rational(0)
    m = _TOKEN.match(token)
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"bad table entry {token!r}")
    sign, digits, sym = m.groups()
    coeff = int(digits) if digits else 1
    value = _symbols()[sym] * coeff if sym else Cyclotomic.rational(coeff)
    return -value if sign else value


def v1080_rows() -> dict[int, list[Cyclotomic]]:
    """Printed rows as exact values, keyed by character number."""
    return {k: [parse_entry(t) for t in row.split()] for k, row in V1080_ROWS.items()}
