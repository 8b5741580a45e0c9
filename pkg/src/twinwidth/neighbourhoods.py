"""Neighbourhood complexity: X-neighbourhoods, the shatter function, and the
machinery behind the ``(d+2) 2^(d+1) |X|`` upper bound on distinct traces.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .trigraph import Trigraph, TrigraphError

# Largest value nu_upper_bound will return; larger bounds are rejected.
MAX_BOUND = 2**63 - 1

Trace = tuple[int, ...]


@dataclass(frozen=True)
class NeighbourhoodProfile:
    x_set: frozenset[int]
    traces: frozenset[Trace]

    @property
    def count(self) -> int:
        return len(self.traces)

    def sorted_traces(self) -> list[Trace]:
        return sorted(self.traces, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class TwinPairSet:
    x: int
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def pairwise_disjoint(self) -> bool:
        seen: set[int] = set()
        for u, v in self.pairs:
            if u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def _x_subset(g: Trigraph, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(X)
    missing = X - g.vertices
    if missing:
        raise TrigraphError(f"X contains vertices not in the graph: {sorted(missing)}")
    return X


def trace(g: Trigraph, v: int, X: frozenset[int]) -> Trace:
    """``N(v) ∩ X`` as a sorted tuple (black neighbours only)."""
    return tuple(sorted(g.black_neighbours(v) & X))


def distinct_x_neighbourhoods(g: Trigraph, X: Iterable[int]) -> NeighbourhoodProfile:
    """The family ``{N(v) ∩ X : v ∈ V(g)}``, ranging over every vertex including X."""
    X = _x_subset(g, X)
    return NeighbourhoodProfile(X, frozenset(trace(g, v, X) for v in g.vertices))


def nu_upper_bound(d: int, k: int) -> int:
    """``(d+2) * 2^(d+1) * k``, the cap on distinct traces over a k-set at twin-width d."""
    if d < 0:
        raise ValueError(f"twin-width must be non-negative, got {d}")
    if k < 1:
        raise ValueError(f"|X| must be at least 1, got {k}")
    bound = (d + 2) * 2 ** (d + 1) * k
    if bound > MAX_BOUND:
        raise OverflowError(f"bound for d={d}, k={k} exceeds {MAX_BOUND}")
    return bound


def check_upper_bound(g: Trigraph, X: Iterable[int], d: int) -> bool:
    X = _x_subset(g, X)
    return distinct_x_neighbourhoods(g, X).count <= nu_upper_bound(d, len(X))


def dedupe_and_extend(g: Trigraph, X: Iterable[int]) -> Trigraph:
    """Build the graph the upper-bound argument works in.

    Outside X, keep the lowest-id vertex of each X-neighbourhood class.
    Then, for each ``v`` in X by ascending id, if no vertex outside X has
    the trace ``N(v) ∩ X`` yet, add a fresh vertex with ``N(u) = N(v)``.
    The new vertex is a false twin of ``v``, so twin-width is unchanged, and
    all traces outside X stay distinct.
    """
    X = _x_subset(g, X)
    keep = set(X)
    seen: dict[Trace, int] = {}
    for v in sorted(g.vertices - X):
        t = trace(g, v, X)
        if t not in seen:
            seen[t] = v
            keep.add(v)
    h = g.induced_subgraph(keep)
    vertices = set(h.vertices)
    edges = set(h.black_edges())
    next_id = max(g.vertices, default=0) + 1
    for v in sorted(X):
        t = trace(h, v, X)
        if t in seen:
            continue
        u = next_id
        next_id += 1
        vertices.add(u)
        edges.update((w, u) for w in h.black_neighbours(v))
        seen[t] = u
    return Trigraph.from_adjacency(vertices, edges)


def twin_pairs(g: Trigraph, X: Iterable[int], x: int) -> TwinPairSet:
    """Pairs outside X that agree on ``X - {x}``."""
    X = _x_subset(g, X)
    if x not in X:
        raise TrigraphError(f"vertex {x} is not in X")
    rest = X - {x}
    classes: dict[Trace, list[int]] = {}
    for v in sorted(g.vertices - X):
        classes.setdefault(trace(g, v, rest), []).append(v)
    pairs = frozenset(p for members in classes.values() for p in combinations(members, 2))
    return TwinPairSet(x, pairs)


def min_twin_pair_vertex(g: Trigraph, X: Iterable[int]) -> tuple[int, int]:
    """``(x, |T_x|)`` for the ``x`` in X with fewest twin pairs (smallest id on ties)."""
    X = _x_subset(g, X)
    if not X:
        raise ValueError("X must be non-empty")
    return min(((x, len(twin_pairs(g, X, x))) for x in sorted(X)), key=lambda p: p[1])


def shatter_function(g: Trigraph, n: int) -> int:
    """Max over n-subsets A of the number of distinct traces ``A ∩ N(v)``.

    Exhaustive over all n-subsets; only for small graphs.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > len(g):
        raise ValueError(f"n={n} exceeds the number of vertices {len(g)}")
    vertices = sorted(g.vertices)
    nbrs = [g.black_neighbours(v) for v in vertices]
    ceiling = min(2**n, len(vertices)) if vertices else 1
    best = 0
    for A in combinations(vertices, n):
        A = frozenset(A)
        count = len({frozenset(N & A) for N in nbrs})
        if count > best:
            best = count
            if best == ceiling:
                break
    return max(best, 1)
