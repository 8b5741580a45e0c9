"""
A bipartite graph with many distinct neighbourhoods
===================================================

The construction attaches 2^C vertices to each admissible triple (i, j, t)
over X = {x_1..x_k}, and comes with a contraction sequence of red degree at
most max(AB, C) + 2. With C = d-2 and A = B = floor(sqrt(d-2)) that is d.
"""

from twinwidth import (
    LbParameters,
    build_lb_graph,
    build_lb_schedule,
    partition_at_step,
    predicted_partition,
    verify_lb,
)

p = LbParameters.from_d(3, 6)
lb = build_lb_graph(p)
print("triples:", p.triples())
for v, (i, j, t, y) in sorted(lb.index.items()):
    print(f"  v{v}: i={i} j={j} t={t} Y={y:0{p.C}b} N={lb.neighbourhood_of(i, j, t, y)}")

schedule = build_lb_schedule(p, lb)
print("sequence:", list(schedule.sequence))
for ell, step in enumerate(schedule.phase_ends):
    parts = partition_at_step(lb.graph, schedule.sequence, step)
    assert parts == predicted_partition(lb, ell)
    print(f"after phase {ell}:", sorted((sorted(s) for s in parts if len(s) > 1)))

# Growth with d at k = 4d: distinct traces over d 2^d k.
for d in (4, 6, 8):
    r = verify_lb(LbParameters.from_d(d, 4 * d))
    print(f"d={d} k={4 * d} n={r.total_vertices} width={r.width} distinct={r.distinct_count} "
          f"ratio={float(r.ratio):.3f}")
