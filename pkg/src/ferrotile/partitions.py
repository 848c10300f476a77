"""Integer partitions, their Ferrers boards and the checkerboard coloring.

Coordinates are 1-based with row 1 at the top and column 1 at the left.
Cell ``(i, j)`` is black when ``i + j`` is even, so ``(1, 1)`` is always black.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "Board",
    "Cell",
    "Color",
    "ColorSummary",
    "Malformed",
    "NonPositivePart",
    "NotMonotone",
    "Partition",
    "PartitionError",
    "cells",
    "color_of",
    "color_summary",
    "conjugate",
    "generate_partitions",
    "is_self_conjugate",
    "is_staircase",
    "parse_partition",
    "row_imbalance",
    "row_labels",
]


class PartitionError(ValueError):
    """Base class for invalid partition input."""


class NonPositivePart(PartitionError):
    pass


class NotMonotone(PartitionError):
    pass


class Malformed(PartitionError):
    pass


@dataclass(frozen=True, slots=True)
class Partition:
    """A non-increasing tuple of positive parts, one per board row."""

    parts: tuple[int, ...] = ()

    def __init__(self, *parts: int):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        object.__setattr__(self, "parts", tuple(int(x) for x in parts))
        for k, x in enumerate(self.parts):
            if x <= 0:
                raise NonPositivePart(f"part {k + 1} is {x}; parts must be positive")
            if k and x > self.parts[k - 1]:
                raise NotMonotone(
                    f"part {k + 1} ({x}) exceeds part {k} ({self.parts[k - 1]})"
                )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"

    @property
    def size(self) -> int:
        """Total number of cells."""
        return sum(self.parts)


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


Board = frozenset  # frozenset[Cell]


class Color(enum.Enum):
    BLACK = "B"
    WHITE = "W"


class ColorSummary(NamedTuple):
    black: int
    white: int

    @property
    def imbalance(self) -> int:
        return self.black - self.white


_TOKEN = re.compile(r"[+-]?\d+")


def parse_partition(text: str) -> Partition:
    """Parse the canonical comma-separated form, e.g. ``"8,6,5,4,4,1"``.

    The empty string is the empty partition.
    """
    text = text.strip()
    if not text:
        return Partition()
    values = []
    for token in text.split(","):
        token = token.strip()
        if not _TOKEN.fullmatch(token):
            raise Malformed(f"not an integer: {token!r}")
        values.append(int(token))
    return Partition(values)


def generate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in generate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], n, n)
    return out


def conjugate(p: Partition) -> Partition:
    """Column heights of the diagram (its transpose)."""
    if not p.parts:
        return Partition()
    return Partition(sum(1 for x in p.parts if x > c) for c in range(p.parts[0]))


def is_self_conjugate(p: Partition) -> bool:
    return conjugate(p) == p


def cells(p: Partition) -> frozenset[Cell]:
    return frozenset(
        Cell(r, c) for r, length in enumerate(p.parts, 1) for c in range(1, length + 1)
    )


def color_of(cell: Cell) -> Color:
    return Color.BLACK if (cell[0] + cell[1]) % 2 == 0 else Color.WHITE


def row_imbalance(row: int, length: int) -> int:
    """Black minus white cells in row ``row`` holding ``length`` cells.

    Colors alternate along a row, so only odd rows contribute, with the
    color of the first cell.
    """
    if length % 2 == 0:
        return 0
    return 1 if row % 2 == 1 else -1


def color_summary(p: Partition) -> ColorSummary:
    n = p.size
    imbalance = sum(row_imbalance(r, x) for r, x in enumerate(p.parts, 1))
    black = (n + imbalance) // 2
    return ColorSummary(black, n - black)


def row_labels(p: Partition) -> tuple[int, ...]:
    """Running black-minus-white count over rows ``1..k`` for each ``k``.

    The last label equals the imbalance of the whole board.
    """
    labels = []
    total = 0
    for r, x in enumerate(p.parts, 1):
        total += row_imbalance(r, x)
        labels.append(total)
    return tuple(labels)


def is_staircase(p: Partition) -> bool:
    """True for two or more rows where each row is one shorter than the last."""
    parts = p.parts
    return len(parts) >= 2 and all(a - b == 1 for a, b in zip(parts, parts[1:]))
