"""
Contraction sequences and exact twin-width
==========================================

A sequence is certified by replaying it. The greedy heuristic gives an
upper bound, and the branch-and-bound solver gives the exact value on
small graphs.
"""

import networkx as nx

from twinwidth import Trigraph, exact_tww, greedy_sequence, partition_at_step, replay_and_verify

p4 = Trigraph.from_edge_list(4, [(1, 2), (2, 3), (3, 4)])
report = replay_and_verify(p4, [(1, 2), (1, 3), (1, 4)], budget=1)
print("P4:", report.as_dict())
print("partition after one step:", sorted(map(sorted, partition_at_step(p4, [(1, 2), (1, 3), (1, 4)], 1))))

# A broken sequence is reported, not raised.
print("dead vertex:", replay_and_verify(p4, [(1, 2), (1, 2), (1, 4)]).error)

# Greedy vs exact on a few named graphs.
named = {
    "cycle C7": nx.cycle_graph(7),
    "cube Q3": nx.hypercube_graph(3),
    "Petersen": nx.petersen_graph(),
}
for name, h in named.items():
    h = nx.convert_node_labels_to_integers(h, first_label=1)
    g = Trigraph.from_edge_list(h.number_of_nodes(), list(h.edges()))
    _, greedy_width = greedy_sequence(g)
    width, witness = exact_tww(g)
    assert replay_and_verify(g, witness, width).valid
    print(f"{name:10s} greedy={greedy_width} exact={width}")
