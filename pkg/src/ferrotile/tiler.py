"""Recursive domino tiler for balanced Ferrers boards.

Each step looks at the current board and applies the first case that fits:

``Left``
    column 1 has even height: cover it with vertical dominoes.
``Top``
    row 1 has even length: cover it with horizontal dominoes.
``Bottom``
    the last row has at least two cells: cover its two rightmost cells.
``OddSplit``
    none of the above. The last row is a single black cell, and some row
    ``m`` above it has running label 0, so rows ``1..m`` and ``m+1..`` are
    two smaller balanced boards.

Sub-boards are processed from an explicit stack, never by recursion on the
call stack. ``step_decompose`` reports dominoes in the coordinates of the
board it was given; ``tile`` translates them back to the original board.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .partitions import (
    Cell,
    Color,
    Partition,
    cells,
    color_of,
    color_summary,
    row_labels,
)

__all__ = [
    "CASES",
    "Case4PreconditionError",
    "Domino",
    "EmptyBoard",
    "InternalInvariantViolation",
    "NoZeroRow",
    "StepOutcome",
    "Tiling",
    "TilingError",
    "Unbalanced",
    "Untileable",
    "find_zero_row",
    "step_decompose",
    "tile",
    "tiling_from_json",
    "tiling_to_json",
    "validate_tiling",
]

CASES = ("Base", "Left", "Top", "Bottom", "OddSplit")


class TilingError(Exception):
    pass


class Untileable(TilingError):
    """The board has unequal black and white counts."""

    def __init__(self, imbalance: int):
        super().__init__(f"board is untileable: imbalance {imbalance}")
        self.imbalance = imbalance


class EmptyBoard(TilingError):
    pass


class Unbalanced(TilingError):
    pass


class NoZeroRow(TilingError):
    pass


class Case4PreconditionError(TilingError):
    pass


class InternalInvariantViolation(AssertionError):
    """A balanced board broke an invariant the algorithm relies on."""


@dataclass(frozen=True, order=True, slots=True)
class Domino:
    """Two edge-adjacent cells, smaller cell first."""

    a: Cell
    b: Cell

    def __post_init__(self):
        a, b = Cell(*self.a), Cell(*self.b)
        if abs(a.row - b.row) + abs(a.col - b.col) != 1:
            raise ValueError(f"cells {a} and {b} are not adjacent")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def horizontal(self) -> bool:
        return self.a.row == self.b.row

    def shifted(self, drow: int, dcol: int) -> "Domino":
        return Domino(
            Cell(self.a.row + drow, self.a.col + dcol),
            Cell(self.b.row + drow, self.b.col + dcol),
        )

    def __iter__(self) -> Iterator[Cell]:
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True, slots=True)
class Tiling:
    dominoes: tuple[Domino, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(self.dominoes))

    def __len__(self) -> int:
        return len(self.dominoes)

    def __iter__(self) -> Iterator[Domino]:
        return iter(self.dominoes)

    def as_set(self) -> frozenset[Domino]:
        return frozenset(self.dominoes)

    def covered(self) -> list[Cell]:
        return [c for d in self.dominoes for c in d]


@dataclass(frozen=True, slots=True)
class StepOutcome:
    case_id: str
    placed: tuple[Domino, ...]
    residuals: tuple[Partition, ...]
    # (row, col) offset of each residual inside the decomposed board.
    offsets: tuple[tuple[int, int], ...] = field(default=(), compare=False)
    board: Partition | None = field(default=None, compare=False)

    def trace_line(self) -> str:
        res = "|".join(str(p) for p in self.residuals)
        return f"case={self.case_id} placed={len(self.placed)} residuals={res}"


def _case4_violation(p: Partition) -> str | None:
    parts = p.parts
    if len(parts) % 2 == 0:
        return f"column 1 has even height {len(parts)}"
    if parts[0] % 2 == 0:
        return f"row 1 has even length {parts[0]}"
    if parts[-1] != 1:
        return f"last row has {parts[-1]} cells"
    imbalance = color_summary(p).imbalance
    if imbalance:
        return f"imbalance {imbalance}"
    return None


def find_zero_row(p: Partition, *, strict: bool = True) -> int:
    """Topmost row ``m < len(p)`` whose running label is 0.

    With ``strict`` the board must be in the odd configuration reached after
    the Left, Top and Bottom cases fail; otherwise only balance is required.
    """
    if strict:
        problem = _case4_violation(p)
        if problem:
            raise Case4PreconditionError(problem)
    elif color_summary(p).imbalance:
        raise Unbalanced(f"{p} is not balanced")
    labels = row_labels(p)
    for m, label in enumerate(labels[:-1], 1):
        if label == 0:
            return m
    raise NoZeroRow(f"no zero-labelled row above the last in {p}")


def step_decompose(p: Partition) -> StepOutcome:
    """Apply the first matching case to a non-empty balanced board."""
    parts = p.parts
    if not parts:
        raise EmptyBoard("cannot decompose the empty board")
    imbalance = color_summary(p).imbalance
    if imbalance:
        raise Unbalanced(f"{p} has imbalance {imbalance}")
    height = len(parts)

    if height % 2 == 0:
        placed = tuple(Domino(Cell(r, 1), Cell(r + 1, 1)) for r in range(1, height, 2))
        rest = Partition(x - 1 for x in parts if x > 1)
        return _outcome(p, "Left", placed, [(rest, (0, 1))])

    if parts[0] % 2 == 0:
        placed = tuple(Domino(Cell(1, c), Cell(1, c + 1)) for c in range(1, parts[0], 2))
        return _outcome(p, "Top", placed, [(Partition(parts[1:]), (1, 0))])

    if parts[-1] > 1:
        last = parts[-1]
        placed = (Domino(Cell(height, last - 1), Cell(height, last)),)
        rest = Partition(parts[:-1] + ((last - 2,) if last > 2 else ()))
        return _outcome(p, "Bottom", placed, [(rest, (0, 0))])

    if color_of(Cell(height, 1)) is not Color.BLACK:
        raise InternalInvariantViolation(f"bottom cell of {p} is not black")
    try:
        m = find_zero_row(p)
    except NoZeroRow as exc:
        raise InternalInvariantViolation(str(exc)) from exc
    upper, lower = Partition(parts[:m]), Partition(parts[m:])
    return _outcome(p, "OddSplit", (), [(upper, (0, 0)), (lower, (m, 0))])


def _outcome(p, case_id, placed, residuals) -> StepOutcome:
    kept = [(q, off) for q, off in residuals if q.parts]
    return StepOutcome(
        case_id,
        tuple(placed),
        tuple(q for q, _ in kept),
        tuple(off for _, off in kept),
        p,
    )


def tile(p: Partition, trace: list[StepOutcome] | None = None) -> Tiling:
    """Tile a balanced board with the four-case algorithm.

    Raises :class:`Untileable` if the black and white counts differ. When
    ``trace`` is a list, every step is appended to it in processing order
    (depth first, upper residual before lower).
    """
    imbalance = color_summary(p).imbalance
    if imbalance:
        raise Untileable(imbalance)
    dominoes: list[Domino] = []
    stack: list[tuple[Partition, int, int]] = [(p, 0, 0)] if p.parts else []
    while stack:
        board, drow, dcol = stack.pop()
        try:
            step = step_decompose(board)
        except Unbalanced as exc:
            raise InternalInvariantViolation(str(exc)) from exc
        if trace is not None:
            trace.append(step)
        dominoes.extend(d.shifted(drow, dcol) for d in step.placed)
        for q, (r, c) in reversed(list(zip(step.residuals, step.offsets))):
            stack.append((q, drow + r, dcol + c))
    return Tiling(tuple(dominoes))


def validate_tiling(p: Partition, t: Iterable[Domino]) -> bool:
    board = cells(p)
    seen: set[Cell] = set()
    for d in t:
        pair = tuple(d)
        if len(pair) != 2:
            return False
        a, b = pair
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            return False
        for c in pair:
            if c not in board or c in seen:
                return False
            seen.add(c)
    return len(seen) == len(board)


def tiling_to_json(t: Tiling) -> list[dict[str, int]]:
    return [
        {"r1": d.a.row, "c1": d.a.col, "r2": d.b.row, "c2": d.b.col} for d in t
    ]


def tiling_from_json(data: list[dict[str, int]]) -> Tiling:
    return Tiling(
        tuple(Domino(Cell(o["r1"], o["c1"]), Cell(o["r2"], o["c2"])) for o in data)
    )
