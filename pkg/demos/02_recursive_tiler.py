"""Replay the four-case tiler on the board 8,6,5,4,4,1."""
from ferrotile import Partition, Untileable, tile, validate_tiling
from ferrotile.render import render_ascii

board = Partition(8, 6, 5, 4, 4, 1)
print("\n".join(render_ascii(board)))

trace = []
tiling = tile(board, trace)
print()
for step in trace:
    print(step.trace_line())

print()
print("\n".join(render_ascii(board, tiling)))
print("dominoes:", len(tiling), "valid:", validate_tiling(board, tiling))

try:
    tile(Partition(4, 3, 2, 1))
except Untileable as exc:
    print("\n4,3,2,1 ->", exc)
