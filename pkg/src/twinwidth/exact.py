"""Exact twin-width of small graphs by branch and bound.

Iterative deepening over the width budget: for d = 0, 1, ... a depth-first
search looks for a contraction sequence whose red degree never exceeds d.
Trigraphs already shown infeasible for d are memoised under a canonical key.
Exact twins are contracted without branching, since the result is an
induced subtrigraph and cannot be harder.

Practical up to about 10 vertices.
"""

from __future__ import annotations

from . import _bitgraph
from ._bitgraph import BitState
from .contraction import ContractionSequence, greedy_sequence
from .trigraph import Trigraph


class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.failed: set[tuple] = set()
        self.nodes = 0

    def solve(self, state: BitState) -> list[tuple[int, int]] | None:
        self.nodes += 1
        verts = _bitgraph.live_vertices(state)
        if len(verts) <= self.budget + 1:
            # Any order works: no vertex can see more than len(verts) - 1 others.
            return [(verts[0], v) for v in verts[1:]]
        for a, u in enumerate(verts):
            for v in verts[a + 1:]:
                if _bitgraph.twins(state, u, v):
                    nxt, _ = _bitgraph.contract(state, u, v)
                    rest = self.solve(nxt)
                    return None if rest is None else [(u, v)] + rest
        key = _bitgraph.canonical_key(state)
        if key in self.failed:
            return None
        children = []
        for a, u in enumerate(verts):
            for v in verts[a + 1:]:
                nxt, red = _bitgraph.contract(state, u, v)
                if red <= self.budget:
                    children.append((red, u, v, nxt))
        children.sort(key=lambda c: c[:3])
        for _, u, v, nxt in children:
            rest = self.solve(nxt)
            if rest is not None:
                return [(u, v)] + rest
        self.failed.add(key)
        return None


def exact_tww(g: Trigraph, upper_hint: int | None = None) -> tuple[int, ContractionSequence]:
    """Twin-width of ``g`` with an optimal witness sequence.

    The greedy width is always a valid cap. ``upper_hint`` may lower it; a
    hint below the true twin-width raises ``ValueError``.
    """
    if len(g) <= 1:
        return 0, ContractionSequence()
    state, ids = _bitgraph.from_trigraph(g)
    greedy_seq, greedy_width = greedy_sequence(g)
    cap = greedy_width if upper_hint is None else min(upper_hint, greedy_width)
    for d in range(_bitgraph.max_red(state), cap + 1):
        if d == greedy_width:
            return greedy_width, greedy_seq
        path = _Search(d).solve(state)
        if path is not None:
            return d, ContractionSequence((ids[u], ids[v]) for u, v in path)
    raise ValueError(f"upper_hint={upper_hint} is below the twin-width")


def twin_width_at_most(g: Trigraph, d: int) -> ContractionSequence | None:
    """A ``d``-sequence for ``g`` if one exists, else ``None``."""
    if len(g) <= 1:
        return ContractionSequence()
    state, ids = _bitgraph.from_trigraph(g)
    if _bitgraph.max_red(state) > d:
        return None
    path = _Search(d).solve(state)
    if path is None:
        return None
    return ContractionSequence((ids[u], ids[v]) for u, v in path)
