"""
Contracting vertices in a trigraph
===================================

A contraction merges two vertices. Shared black neighbours stay black,
vertices seen by neither stay non-adjacent, and everything else turns red.
"""

from twinwidth import EdgeKind, Trigraph

# The path 1-2-3-4 as an ordinary graph.
p4 = Trigraph.from_edge_list(4, [(1, 2), (2, 3), (3, 4)])
print(p4, "red degree:", p4.max_red_degree())

# Merge 2 into 1. Vertex 3 was adjacent to 2 but not to 1, so 1-3 turns red.
h = p4.contract(1, 2)
print("black:", h.black_edges(), "red:", h.red_edges())
print("red neighbours of 1:", sorted(h.neighbours(1, {EdgeKind.RED})))

# Twins never create red edges: 1 and 3 both see exactly {2, 4} in C4.
c4 = Trigraph.from_edge_list(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
print("C4 / (1,3) red edges:", c4.contract(1, 3).red_edges())

# In C5, any adjacent pair leaves the merged vertex with two red edges.
c5 = Trigraph.from_edge_list(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
print("C5 / (1,2) red degree:", c5.contract(1, 2).max_red_degree())
