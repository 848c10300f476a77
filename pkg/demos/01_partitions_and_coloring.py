"""Partitions, Ferrers boards and the black/white balance test.

Run with ``python demos/01_partitions_and_coloring.py``.
"""
from ferrotile import (
    Partition,
    color_summary,
    conjugate,
    generate_partitions,
    is_staircase,
    row_labels,
)
from ferrotile.render import render_ascii

# All seven partitions of 5, largest parts first.
for p in generate_partitions(5):
    print(f"{str(p):>10}  ->  {' / '.join(render_ascii(p))}")

# Transposing the diagram gives the conjugate partition.
p = Partition(4, 1)
print("\nconjugate of", p, "is", conjugate(p))

# Checkerboard coloring: (1,1) is black. A board can only be tiled when the
# two colors are equally common.
for p in (Partition(2, 2), Partition(4, 3, 2, 1), Partition(8, 6, 5, 4, 4, 1)):
    s = color_summary(p)
    print(f"{str(p):>12}: black={s.black} white={s.white} imbalance={s.imbalance}")

# Staircases are always unbalanced.
stairs = [p for n in range(21) for p in generate_partitions(n) if is_staircase(p)]
print("\nstaircases up to 20 cells:", len(stairs))
print("all unbalanced:", all(color_summary(p).imbalance for p in stairs))

# Running labels used by the odd case of the tiler.
print("\nrow labels of 7,5,4,3,1:", row_labels(Partition(7, 5, 4, 3, 1)))
