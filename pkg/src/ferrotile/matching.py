"""Bipartite board graphs, augmenting-path matching and Hall's condition.

Black cells are the left vertices and white cells the right vertices, both in
row-major order. A perfect matching of this graph is the same thing as a
domino tiling of the board.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from .partitions import Cell, Color, Partition, cells, color_of
from .tiler import Domino, Tiling

__all__ = [
    "HALL_LIMIT",
    "BipartiteGraph",
    "HallError",
    "HallReport",
    "Matching",
    "NotPerfect",
    "TooLarge",
    "Unbalanced",
    "build_graph",
    "dump_graph",
    "hall_check",
    "is_perfect",
    "matching_to_tiling",
    "max_matching",
    "neighborhood",
]

HALL_LIMIT = 24

Matching = frozenset  # frozenset[tuple[int, int]] of (left index, right index)


class NotPerfect(ValueError):
    pass


class HallError(ValueError):
    pass


class Unbalanced(HallError):
    pass


class TooLarge(HallError):
    pass


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple[Hashable, ...]
    right: tuple[Hashable, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        adjacency = tuple(frozenset(a) for a in self.adjacency)
        if len(adjacency) != len(self.left):
            raise ValueError("need one adjacency set per left vertex")
        for nbrs in adjacency:
            if any(not 0 <= v < len(self.right) for v in nbrs):
                raise ValueError("adjacency refers to a missing right vertex")
        object.__setattr__(self, "adjacency", adjacency)

    @classmethod
    def from_edges(
        cls,
        n_left: int,
        n_right: int,
        edges: Iterable[tuple[int, int]],
        left: Sequence[Hashable] | None = None,
        right: Sequence[Hashable] | None = None,
    ) -> "BipartiteGraph":
        adj: list[set[int]] = [set() for _ in range(n_left)]
        for u, v in edges:
            adj[u].add(v)
        return cls(
            tuple(left) if left is not None else tuple(range(n_left)),
            tuple(right) if right is not None else tuple(range(n_right)),
            tuple(frozenset(a) for a in adj),
        )

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in sorted(nbrs)]


def build_graph(p: Partition) -> BipartiteGraph:
    board = cells(p)
    ordered = sorted(board)
    left = [c for c in ordered if color_of(c) is Color.BLACK]
    right = [c for c in ordered if color_of(c) is Color.WHITE]
    index = {c: k for k, c in enumerate(right)}
    adjacency = []
    for r, c in left:
        nbrs = (Cell(r - 1, c), Cell(r + 1, c), Cell(r, c - 1), Cell(r, c + 1))
        adjacency.append(frozenset(index[n] for n in nbrs if n in index))
    return BipartiteGraph(tuple(left), tuple(right), tuple(adjacency))


def dump_graph(g: BipartiteGraph) -> str:
    """One line per black cell, e.g. ``B(1,1): W(1,2) W(2,1)``."""
    lines = []
    for u, nbrs in zip(g.left, g.adjacency):
        targets = " ".join(f"W{g.right[v]}" for v in sorted(nbrs))
        lines.append(f"B{u}: {targets}".rstrip())
    return "\n".join(lines)


def max_matching(g: BipartiteGraph) -> frozenset[tuple[int, int]]:
    """Maximum-cardinality matching by repeated augmenting paths.

    Starts from the empty matching and, for each left vertex in index order,
    searches depth first for an alternating path ending at a free right
    vertex (neighbors tried in ascending order), then flips it. This is
    Ford-Fulkerson on the unit-capacity source/sink network.
    """
    n_right = len(g.right)
    adjacency = [sorted(a) for a in g.adjacency]
    match_right = [-1] * n_right
    match_left = [-1] * len(g.left)

    for root in range(len(g.left)):
        visited = [False] * n_right
        # Each frame: (left vertex, position in its neighbor list).
        stack = [[root, 0]]
        via: list[int] = []  # right vertex used to reach stack[k + 1]
        found = -1
        while stack:
            frame = stack[-1]
            u, i = frame
            nbrs = adjacency[u]
            if i == len(nbrs):
                stack.pop()
                if via:
                    via.pop()
                continue
            frame[1] = i + 1
            v = nbrs[i]
            if visited[v]:
                continue
            visited[v] = True
            if match_right[v] == -1:
                found = v
                break
            via.append(v)
            stack.append([match_right[v], 0])
        if found == -1:
            continue
        path_right = via + [found]
        for (u, _), v in zip(stack, path_right):
            match_left[u] = v
            match_right[v] = u

    return frozenset((u, v) for u, v in enumerate(match_left) if v != -1)


def is_perfect(g: BipartiteGraph, m: Iterable[tuple[int, int]]) -> bool:
    m = list(m)
    return (
        len(g.left) == len(g.right) == len(m)
        and len({u for u, _ in m}) == len(m)
        and len({v for _, v in m}) == len(m)
        and all(v in g.adjacency[u] for u, v in m)
    )


def matching_to_tiling(p: Partition, m: Iterable[tuple[int, int]]) -> Tiling:
    g = build_graph(p)
    m = list(m)
    if not is_perfect(g, m):
        raise NotPerfect(f"matching of size {len(m)} does not cover the board {p}")
    return Tiling(tuple(sorted(Domino(g.left[u], g.right[v]) for u, v in m)))


def neighborhood(g: BipartiteGraph, subset: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for u in subset:
        out |= g.adjacency[u]
    return frozenset(out)


@dataclass(frozen=True)
class HallReport:
    satisfied: bool
    min_slack: int
    witness: tuple[int, ...]

    def describe(self, g: BipartiteGraph | None = None) -> str:
        if g is not None:
            names = " ".join(str(g.left[u]) for u in self.witness)
        else:
            names = " ".join(map(str, self.witness))
        verdict = "satisfied" if self.satisfied else "violated"
        return f"hall={verdict} min_slack={self.min_slack} witness={names}"


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def hall_check(g: BipartiteGraph, limit: int = HALL_LIMIT) -> HallReport:
    """Check ``|N(S)| >= |S|`` for every non-empty subset ``S`` of the left side.

    All ``2**n - 1`` subsets are enumerated, so ``n`` is capped at ``limit``.
    The witness is the first subset in bitmask order reaching the minimum
    slack, reported as sorted left indices.
    """
    n = len(g.left)
    if n != len(g.right):
        raise Unbalanced(f"{n} left vertices but {len(g.right)} right vertices")
    if n > limit:
        raise TooLarge(f"{n} left vertices exceeds the exhaustive limit {limit}")
    if n == 0:
        return HallReport(True, 0, ())

    nbr_masks = [sum(1 << v for v in a) for a in g.adjacency]
    # neigh[mask] = union of neighbor masks of the bits set in mask
    neigh = np.zeros(1 << n, dtype=np.uint32)
    for i, bits in enumerate(nbr_masks):
        half = 1 << i
        neigh[half : 2 * half] = neigh[:half] | np.uint32(bits)
    masks = np.arange(1 << n, dtype=np.uint32)
    slack = _popcount(neigh) - _popcount(masks)
    slack[0] = np.iinfo(np.int64).max
    best = int(np.argmin(slack))
    min_slack = int(slack[best])
    witness = tuple(i for i in range(n) if best >> i & 1)
    return HallReport(min_slack >= 0, min_slack, witness)
