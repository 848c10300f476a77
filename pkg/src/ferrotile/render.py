"""ASCII pictures of boards and tilings."""

from __future__ import annotations

import string

from .partitions import Cell, Partition
from .tiler import Tiling, validate_tiling

__all__ = ["InvalidTiling", "render_ascii"]

EMPTY_GLYPH = "~"
GLYPHS = string.ascii_lowercase


class InvalidTiling(ValueError):
    pass


def render_ascii(p: Partition, t: Tiling | None = None) -> list[str]:
    """One text row per board row.

    Without a tiling every cell is ``~``. With one, dominoes are lettered in
    canonical order starting from ``a``; a domino takes the next letter in
    the cycle unless a neighboring domino already holds it, in which case
    the cycle is advanced until it is free.
    """
    if t is None:
        return [EMPTY_GLYPH * x for x in p.parts]
    if not validate_tiling(p, t):
        raise InvalidTiling(f"not a tiling of {p}")
    owner: dict[Cell, int] = {}
    ordered = sorted(t)
    for k, d in enumerate(ordered):
        owner[d.a] = owner[d.b] = k
    glyph: list[str] = []
    for k, d in enumerate(ordered):
        taken = set()
        for r, c in d:
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                j = owner.get(nb)
                if j is not None and j < k:
                    taken.add(glyph[j])
        # at most 6 neighbors, so a free letter always exists
        start = k % len(GLYPHS)
        for step in range(len(GLYPHS)):
            g = GLYPHS[(start + step) % len(GLYPHS)]
            if g not in taken:
                glyph.append(g)
                break
    return [
        "".join(glyph[owner[Cell(r, c)]] for c in range(1, x + 1))
        for r, x in enumerate(p.parts, 1)
    ]
