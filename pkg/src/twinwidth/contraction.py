"""Contraction sequences: replay, certification, partitions, and a greedy heuristic."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from scipy.cluster.hierarchy import DisjointSet

from . import _bitgraph
from .trigraph import Trigraph, TrigraphError


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered ``(survivor, merged)`` steps; ``merged`` disappears into ``survivor``."""

    steps: tuple[tuple[int, int], ...] = ()

    def __init__(self, steps: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "steps", tuple((int(a), int(b)) for a, b in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def relabel(self, mapping: dict[int, int]) -> ContractionSequence:
        return ContractionSequence((mapping[a], mapping[b]) for a, b in self.steps)


@dataclass
class SequenceReport:
    """Outcome of replaying a sequence.

    ``width`` is the largest red degree seen over the replayed trigraphs
    (including the prefix before any structural error). ``first_violation``
    is ``(step, red degree)`` for the first step whose trigraph exceeds the
    budget; steps are 1-based, step ``i`` being the trigraph after ``i``
    contractions. ``error``/``error_step`` describe a structural problem.
    """

    valid: bool
    width: int
    steps_applied: int
    budget: int | None = None
    first_violation: tuple[int, int] | None = None
    error: str | None = None
    error_step: int | None = None
    red_degrees: list[int] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "width": self.width,
            "steps_applied": self.steps_applied,
            "budget": self.budget,
            "first_violation": list(self.first_violation) if self.first_violation else None,
            "error": self.error,
            "error_step": self.error_step,
        }


def replay_and_verify(
    g: Trigraph, seq: ContractionSequence | Iterable[tuple[int, int]], budget: int | None = None
) -> SequenceReport:
    """Replay ``seq`` on ``g`` and measure the red degree it reaches.

    Without a budget, ``valid`` only says the sequence is well formed
    (every step names two live vertices and exactly one vertex remains).
    """
    if not isinstance(seq, ContractionSequence):
        seq = ContractionSequence(seq)
    work = g.copy()
    width = work.max_red_degree()
    first_violation = None
    history = []
    if budget is not None and width > budget:
        first_violation = (0, width)
    error = error_step = None
    applied = 0
    for step, (u, v) in enumerate(seq.steps, start=1):
        if u == v:
            error, error_step = f"step {step}: survivor and merged vertex are both {u}", step
            break
        dead = [x for x in (u, v) if x not in work]
        if dead:
            error, error_step = f"step {step}: vertex {dead[0]} is not live", step
            break
        touched = work._contract_in_place(u, v)
        applied = step
        local = max(work.red_degree(x) for x in touched if x in work)
        history.append(local)
        if local > width:
            width = local
        if budget is not None and first_violation is None and local > budget:
            first_violation = (step, work.max_red_degree())
    if error is None and len(work) > 1:
        error = f"sequence has {len(seq)} steps, {len(g) - 1} needed to reach one vertex"
        error_step = len(seq)
    valid = error is None and (budget is None or width <= budget)
    return SequenceReport(
        valid=valid,
        width=width,
        steps_applied=applied,
        budget=budget,
        first_violation=first_violation,
        error=error,
        error_step=error_step,
        red_degrees=history,
    )


def _checked_merges(g: Trigraph, seq: ContractionSequence, upto: int) -> DisjointSet:
    parts = DisjointSet(sorted(g.vertices))
    live = set(g.vertices)
    for step, (u, v) in enumerate(seq.steps[:upto], start=1):
        if u == v or u not in live or v not in live:
            raise TrigraphError(f"step {step}: ({u}, {v}) does not name two live vertices")
        live.discard(v)
        parts.merge(u, v)
    return parts


def partition_at_step(
    g: Trigraph, seq: ContractionSequence | Iterable[tuple[int, int]], i: int
) -> set[frozenset[int]]:
    """Partition of the original vertices after the first ``i`` contractions."""
    if not isinstance(seq, ContractionSequence):
        seq = ContractionSequence(seq)
    if not 0 <= i <= len(seq):
        raise ValueError(f"step index {i} outside 0..{len(seq)}")
    if i > max(len(g) - 1, 0):
        raise ValueError(f"step index {i} exceeds n-1 = {len(g) - 1}")
    return {frozenset(s) for s in _checked_merges(g, seq, i).subsets()}


def partition_trace(
    g: Trigraph, seq: ContractionSequence | Iterable[tuple[int, int]]
) -> Iterator[set[frozenset[int]]]:
    """Yield the partition after 0, 1, ..., len(seq) contractions."""
    if not isinstance(seq, ContractionSequence):
        seq = ContractionSequence(seq)
    parts = DisjointSet(sorted(g.vertices))
    live = set(g.vertices)
    yield {frozenset(s) for s in parts.subsets()}
    for step, (u, v) in enumerate(seq.steps, start=1):
        if u == v or u not in live or v not in live:
            raise TrigraphError(f"step {step}: ({u}, {v}) does not name two live vertices")
        live.discard(v)
        parts.merge(u, v)
        yield {frozenset(s) for s in parts.subsets()}


def greedy_sequence(g: Trigraph) -> tuple[ContractionSequence, int]:
    """Contract, at each step, the live pair giving the smallest red degree.

    Ties go to the lexicographically smallest ``(survivor, merged)`` with
    ``survivor < merged``. Returns the sequence and its replay width.
    """
    if len(g) == 0:
        return ContractionSequence(), 0
    state, ids = _bitgraph.from_trigraph(g)
    width = _bitgraph.max_red(state)
    steps = []
    while state.live & (state.live - 1):
        verts = _bitgraph.live_vertices(state)
        best = None
        for a, u in enumerate(verts):
            for v in verts[a + 1:]:
                nxt, red = _bitgraph.contract(state, u, v)
                if best is None or red < best[0]:
                    best = (red, u, v, nxt)
                    if red == 0:
                        break
            if best[0] == 0:
                break
        red, u, v, state = best
        width = max(width, red)
        steps.append((ids[u], ids[v]))
    return ContractionSequence(steps), width
