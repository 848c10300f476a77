"""The board as a bipartite graph: augmenting paths and Hall's condition."""
from ferrotile import Partition, build_graph, hall_check, matching_to_tiling, max_matching
from ferrotile.matching import BipartiteGraph, dump_graph
from ferrotile.render import render_ascii

board = Partition(2, 2, 1, 1)
g = build_graph(board)
print(dump_graph(g))

m = max_matching(g)
print("\nmatching size:", len(m), "of", len(g.left))
print("\n".join(render_ascii(board, matching_to_tiling(board, m))))

report = hall_check(g)
print("\n" + report.describe(g))

# A hand-built graph where left vertices 0 and 1 share a single neighbor.
bad = BipartiteGraph.from_edges(3, 3, [(0, 0), (1, 0), (2, 1), (2, 2)])
report = hall_check(bad)
print("\ndeficient graph:", report.describe())
print("max matching there:", len(max_matching(bad)))
