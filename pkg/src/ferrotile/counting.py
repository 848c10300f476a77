"""Counting and enumerating domino tilings.

Two independent routes: a backtracking enumerator (the oracle) and a
Kasteleyn-matrix determinant evaluated with exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import Cell, Partition, cells
from .tiler import Domino, Tiling

__all__ = [
    "BRUTE_LIMIT",
    "KasteleynMatrix",
    "NotPerfectSquare",
    "TooLarge",
    "bareiss_determinant",
    "count_brute",
    "count_fkt",
    "enumerate_tilings",
    "kasteleyn_matrix",
]

BRUTE_LIMIT = 40


class TooLarge(ValueError):
    pass


class NotPerfectSquare(ArithmeticError):
    pass


def _row_major(p: Partition) -> list[Cell]:
    return sorted(cells(p))


def enumerate_tilings(p: Partition, limit: int | None = None) -> Iterator[Tiling]:
    """Yield every tiling once.

    The first uncovered cell in row-major order is always covered next,
    horizontally before vertically, so the order is stable under ``limit``.
    Nothing is yielded for an untileable board.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")
    order = _row_major(p)
    board = set(order)
    covered: set[Cell] = set()
    placed: list[Domino] = []
    emitted = 0

    def options(cell: Cell):
        r, c = cell
        for other in (Cell(r, c + 1), Cell(r + 1, c)):
            if other in board and other not in covered:
                yield other

    def first_free(start: int) -> int:
        while start < len(order) and order[start] in covered:
            start += 1
        return start

    pos = first_free(0)
    if pos == len(order):
        yield Tiling(())
        return
    # Each frame holds the cell being covered and an iterator over its
    # remaining partners; the frame's own domino is undone on re-entry.
    stack = [(pos, options(order[pos]))]
    while stack:
        pos, it = stack[-1]
        cell = order[pos]
        if placed and placed[-1].a == cell:
            d = placed.pop()
            covered.discard(d.a)
            covered.discard(d.b)
        other = next(it, None)
        if other is None:
            stack.pop()
            continue
        placed.append(Domino(cell, other))
        covered.add(cell)
        covered.add(other)
        nxt = first_free(pos + 1)
        if nxt == len(order):
            yield Tiling(tuple(placed))
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue
        stack.append((nxt, options(order[nxt])))


def count_brute(p: Partition, limit: int = BRUTE_LIMIT) -> int:
    """Number of tilings by backtracking, memoized on the covered-cell set."""
    order = _row_major(p)
    n = len(order)
    if n > limit:
        raise TooLarge(f"{n} cells exceeds the brute-force limit {limit}")
    if n % 2:
        return 0
    index = {c: k for k, c in enumerate(order)}
    right = [index.get(Cell(r, c + 1), -1) for r, c in order]
    down = [index.get(Cell(r + 1, c), -1) for r, c in order]
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == full:
            return 1
        # lowest uncovered cell
        free = ~mask & (mask + 1)
        k = free.bit_length() - 1
        total = 0
        for other in (right[k], down[k]):
            if other >= 0 and not mask >> other & 1:
                total += count(mask | free | (1 << other))
        return total

    return count(0)


@dataclass(frozen=True)
class KasteleynMatrix:
    cells: tuple[Cell, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.cells)

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, v = key
        return self.entries[u][v]

    def determinant(self) -> int:
        return bareiss_determinant(self.entries)


def kasteleyn_matrix(p: Partition) -> KasteleynMatrix:
    """Signed adjacency matrix over cells in row-major order.

    Horizontal edges point right. Vertical edges point down in odd columns
    and up in even columns, which puts an odd number of clockwise edges
    around every unit square.
    """
    order = _row_major(p)
    index = {c: k for k, c in enumerate(order)}
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for (r, c), u in index.items():
        v = index.get(Cell(r, c + 1))
        if v is not None:
            rows[u][v], rows[v][u] = 1, -1
        v = index.get(Cell(r + 1, c))
        if v is not None:
            sign = 1 if c % 2 else -1
            rows[u][v], rows[v][u] = sign, -sign
    return KasteleynMatrix(tuple(order), tuple(tuple(row) for row in rows))


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def count_fkt(p: Partition) -> int:
    """Number of tilings as the square root of the Kasteleyn determinant."""
    det = abs(kasteleyn_matrix(p).determinant())
    root = math.isqrt(det)
    if root * root != det:
        raise NotPerfectSquare(f"|det| = {det} is not a perfect square for {p}")
    return root
