"""Bipartite graphs with many distinct X-neighbourhoods at small twin-width.

For parameters ``A, B, C, k`` the graph has an independent set
``X = {x_1..x_k}`` (ids ``1..k``) and, for every triple ``(i, j, t)`` with
``1 <= i <= j <= i+A-1``, ``j+2 <= t <= j+1+B`` and ``t <= k-C``, one vertex
per subset ``Y`` of ``{x_{t+1}..x_{t+C}}`` adjacent to
``{x_i..x_j, x_t} ∪ Y``. The companion contraction sequence keeps the red
degree at most ``max(AB, C) + 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .contraction import ContractionSequence, replay_and_verify
from .neighbourhoods import distinct_x_neighbourhoods
from .trigraph import Trigraph


class LbParameterError(ValueError):
    pass


def min_k(d: int) -> int:
    """Smallest integer ``k >= d + 2 sqrt(d-2) + 1``."""
    if d < 3:
        raise LbParameterError(f"d must be at least 3, got {d}")
    k = d + 1 + math.isqrt(4 * (d - 2))
    while (k - d - 1) ** 2 < 4 * (d - 2):
        k += 1
    return k


@dataclass(frozen=True)
class LbParameters:
    A: int
    B: int
    C: int
    k: int
    d: int | None = None

    @classmethod
    def from_d(cls, d: int, k: int) -> LbParameters:
        if d < 3:
            raise LbParameterError(f"d must be at least 3 so that C = d-2 >= 1, got d={d}")
        if k < min_k(d):
            raise LbParameterError(
                f"k={k} is below the threshold d + 2*sqrt(d-2) + 1 (need k >= {min_k(d)})"
            )
        a = math.isqrt(d - 2)
        return cls(A=a, B=a, C=d - 2, k=k, d=d)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            if getattr(self, name) < 1:
                raise LbParameterError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.k < self.C + 3:
            raise LbParameterError(
                f"k={self.k} must be at least C+3={self.C + 3} for a valid triple to exist"
            )

    @property
    def M(self) -> int:
        return max(self.A * self.B, self.C) + 2

    def triples(self) -> list[tuple[int, int, int]]:
        """Valid ``(i, j, t)`` in lexicographic order."""
        A, B, C, k = self.A, self.B, self.C, self.k
        out = []
        for i in range(1, k + 1):
            for j in range(i, i + A):
                for t in range(j + 2, min(j + 1 + B, k - C) + 1):
                    out.append((i, j, t))
        return out

    def exceeds_width(self, d: int) -> bool:
        """True when ``AB`` or ``C`` is too large for the width bound to be ``<= d``."""
        return self.M > d


@dataclass
class LbGraph:
    params: LbParameters
    graph: Trigraph
    X: tuple[int, ...]
    # non-X vertex id -> (i, j, t, Y bitmask over x_{t+1}..x_{t+C})
    index: dict[int, tuple[int, int, int, int]]
    groups: dict[tuple[int, int, int], list[int]] = field(repr=False, default_factory=dict)

    def neighbourhood_of(self, i: int, j: int, t: int, ymask: int) -> list[int]:
        ids = list(range(i, j + 1)) + [t]
        ids += [t + 1 + b for b in range(self.params.C) if ymask >> b & 1]
        return ids


def build_lb_graph(params: LbParameters) -> LbGraph:
    k, C = params.k, params.C
    X = tuple(range(1, k + 1))
    index: dict[int, tuple[int, int, int, int]] = {}
    groups: dict[tuple[int, int, int], list[int]] = {}
    edges = []
    nxt = k + 1
    for i, j, t in params.triples():
        members = groups.setdefault((i, j, t), [])
        for ymask in range(2**C):
            v = nxt
            nxt += 1
            index[v] = (i, j, t, ymask)
            members.append(v)
            edges.extend((x, v) for x in range(i, j + 1))
            edges.append((t, v))
            edges.extend((t + 1 + b, v) for b in range(C) if ymask >> b & 1)
    g = Trigraph.from_edge_list(nxt - 1, edges)
    return LbGraph(params, g, X, index, groups)


class _Parts:
    """Part bookkeeping for emitting a part-level schedule as vertex contractions.

    Each part is represented by its lowest original id, which is also the
    live vertex standing for it under survivor labels.
    """

    def __init__(self):
        self.steps: list[tuple[int, int]] = []
        self.rep: dict[object, int] = {}

    def add(self, name, v: int) -> None:
        r = self.rep.get(name)
        if r is None:
            self.rep[name] = v
        else:
            self._join(name, r, v)

    def merge(self, into, other) -> None:
        r = self.rep.pop(other, None)
        if r is not None:
            self.add(into, r)

    def _join(self, name, a: int, b: int) -> None:
        lo, hi = min(a, b), max(a, b)
        self.steps.append((lo, hi))
        self.rep[name] = lo


@dataclass
class LbSchedule:
    sequence: ContractionSequence
    # phase_ends[l] = number of contractions applied once phase l is done
    phase_ends: list[int]


def build_lb_schedule(params: LbParameters, g: LbGraph) -> LbSchedule:
    """Emit the phase-by-phase contraction sequence for ``g``.

    Phase ``l`` (``1 <= l <= k-C-1``) goes from the layout after phase
    ``l-1`` to the layout after phase ``l`` in four substeps:
    fold ``B[i,t]`` into ``B[i+1,t]`` (``i = l-1 >= 1``), absorb the sets
    ``V[i+1,j,t]`` into ``B[j,t]``, add ``x_l`` to ``X0``, and move
    ``B[i,i+2]`` into the trash part ``T``. A cleanup then merges the X side,
    the non-X side, and finally the two remaining vertices.
    """
    if g.params != params:
        raise LbParameterError("graph was built from different parameters")
    A, B, C, k = params.A, params.B, params.C, params.k
    parts = _Parts()
    phase_ends = [0]
    for ell in range(0, k - C - 1):
        i = ell
        if ell >= 1:
            for t in range(i + 3, i + 3 + B):
                parts.merge(("B", i + 1, t), ("B", i, t))
        for j in range(i + 1, i + 1 + A):
            for t in range(j + 2, j + 2 + B):
                for v in g.groups.get((i + 1, j, t), ()):
                    parts.add(("B", j, t), v)
        parts.add("X0", ell + 1)
        parts.merge("T", ("B", i, i + 2))
        phase_ends.append(len(parts.steps))
    # Cleanup: X side, then non-X side, then the last pair.
    for x in range(k - C, k + 1):
        parts.add("X0", x)
    for name in sorted((n for n in parts.rep if n != "X0"), key=parts.rep.get):
        parts.merge("Y", name)
    parts.merge("X0", "Y")
    return LbSchedule(ContractionSequence(parts.steps), phase_ends)


def build_lb_sequence(params: LbParameters, g: LbGraph) -> ContractionSequence:
    return build_lb_schedule(params, g).sequence


def predicted_partition(g: LbGraph, ell: int) -> set[frozenset[int]]:
    """Partition predicted after phase ``ell`` (``0 <= ell <= k-C-1``).

    With ``i = ell``: ``B[j,t]`` for ``j = i`` holds every ``V[i',j',t]``
    with ``j' <= i``; for ``j > i`` it holds ``V[i',j,t]`` with ``i' <= i``;
    ``X0 = {x_1..x_ell}``; ``T`` holds every ``V[i',j,t]`` with
    ``t <= ell+1`` and ``i' <= ell``. Everything else is a singleton.
    """
    p = g.params
    if not 0 <= ell <= p.k - p.C - 1:
        raise ValueError(f"phase {ell} outside 0..{p.k - p.C - 1}")
    buckets: dict[object, set[int]] = {}
    singles: list[int] = []
    if ell >= 1:
        buckets["X0"] = set(range(1, ell + 1))
    singles.extend(range(ell + 1, p.k + 1))
    for v, (i2, j2, t, _) in g.index.items():
        if i2 > ell:
            singles.append(v)
        elif t <= ell + 1:
            buckets.setdefault("T", set()).add(v)
        elif j2 <= ell:
            buckets.setdefault(("B", ell, t), set()).add(v)
        else:
            buckets.setdefault(("B", j2, t), set()).add(v)
    out = {frozenset(s) for s in buckets.values() if s}
    out.update(frozenset((v,)) for v in singles)
    return out


@dataclass
class LbReport:
    params: LbParameters
    total_vertices: int
    non_x_count: int
    triples: int
    non_x_distinct: int
    all_distinct: bool
    distinct_count: int
    width: int
    width_bound: int
    sequence_valid: bool
    ratio: Fraction | None

    def as_dict(self) -> dict:
        p = self.params
        return {
            "A": p.A, "B": p.B, "C": p.C, "k": p.k, "d": p.d, "M": p.M,
            "total_vertices": self.total_vertices,
            "non_x_count": self.non_x_count,
            "triples": self.triples,
            "non_x_distinct": self.non_x_distinct,
            "all_distinct": self.all_distinct,
            "distinct_count": self.distinct_count,
            "width": self.width,
            "width_bound": self.width_bound,
            "sequence_valid": self.sequence_valid,
            "ratio": None if self.ratio is None else float(self.ratio),
            "exceeds_target_width": None if p.d is None else p.exceeds_width(p.d),
        }


def verify_lb(params: LbParameters, replay: bool = True) -> LbReport:
    """Build the graph and its sequence, then measure what they certify.

    ``ratio`` (d-mode only) is distinct X-neighbourhoods over ``d 2^d k``,
    counted over all vertices of the graph.
    """
    lb = build_lb_graph(params)
    g = lb.graph
    X = frozenset(lb.X)
    non_x = sorted(lb.index)
    non_x_traces = {frozenset(g.black_neighbours(v) & X) for v in non_x}
    distinct = distinct_x_neighbourhoods(g, X).count
    width, valid = -1, False
    if replay:
        report = replay_and_verify(g, build_lb_sequence(params, lb), params.M)
        width, valid = report.width, report.valid
    ratio = None
    if params.d is not None:
        ratio = Fraction(distinct, params.d * 2**params.d * params.k)
    return LbReport(
        params=params,
        total_vertices=len(g),
        non_x_count=len(non_x),
        triples=len(lb.groups),
        non_x_distinct=len(non_x_traces),
        all_distinct=len(non_x_traces) == len(non_x),
        distinct_count=distinct,
        width=width,
        width_bound=params.M,
        sequence_valid=valid,
        ratio=ratio,
    )
