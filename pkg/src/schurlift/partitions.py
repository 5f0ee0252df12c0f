"""Integer partitions and the Young-diagram operations used by the Schur engine."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare and hash equal. The empty partition
    is a valid value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), or 0 past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form, e.g. ``"4,1,1"``; ``"0"`` or ``""`` is empty."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    text = text.strip("()")
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(str(p) for p in lam) if lam else "0"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(nu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff the diagram of ``lam`` sits inside the diagram of ``nu``."""
    nu, lam = tuple(nu), tuple(lam)
    if len(lam) > len(nu):
        return False
    return all(n >= l for n, l in zip(nu, lam))


def pieri_row(lam: Iterable[int], r: int) -> set[Partition]:
    """All partitions obtained from ``lam`` by adding a horizontal strip of ``r`` boxes."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    lam = Partition(lam)
    return set(_horizontal_strips(tuple(lam), r))


def _horizontal_strips(lam: tuple[int, ...], r: int) -> Iterator[Partition]:
    # row i may grow up to the old length of row i-1 (row 0 is unbounded)
    rows = list(lam) + [0]

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(rows):
            if left == 0:
                yield Partition(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            acc.append(rows[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, r, [])


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    out: list[Partition] = []

    def rec(left: int, cap: int, acc: list[int]) -> None:
        if left == 0:
            out.append(Partition(acc))
            return
        if len(acc) == max_length:
            return
        for p in range(min(left, cap), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()

    rec(n, max_part, [])
    return tuple(out)


def partitions_up_to(n: int) -> list[Partition]:
    return [lam for w in range(n + 1) for lam in partitions_of(w)]
