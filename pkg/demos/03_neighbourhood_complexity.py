"""
Counting distinct X-neighbourhoods
==================================

For a vertex set X, each vertex v leaves the trace N(v) & X. On graphs of
twin-width d the number of distinct traces is at most (d+2) 2^(d+1) |X|.
"""

import random

from twinwidth import (
    Trigraph,
    dedupe_and_extend,
    distinct_x_neighbourhoods,
    exact_tww,
    min_twin_pair_vertex,
    nu_upper_bound,
    shatter_function,
)

p4 = Trigraph.from_edge_list(4, [(1, 2), (2, 3), (3, 4)])
profile = distinct_x_neighbourhoods(p4, {2, 3})
print("P4, X={2,3}:", profile.sorted_traces())

# Compare the count with the bound on a handful of random graphs.
rng = random.Random(0)
for _ in range(5):
    n = 8
    g = Trigraph.from_edge_list(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4])
    d, _ = exact_tww(g)
    X = sorted(rng.sample(range(1, n + 1), 3))
    count = distinct_x_neighbourhoods(g, X).count
    h = dedupe_and_extend(g, X)
    x, t = min_twin_pair_vertex(h, X)
    print(f"tww={d} X={X} count={count} bound={nu_upper_bound(d, len(X))} "
          f"|G'|={len(h)} min|T_x|={t} (x={x})")

# The shatter function of the neighbourhood hypergraph.
g = Trigraph.from_edge_list(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)])
print("shatter:", [shatter_function(g, n) for n in range(7)])
