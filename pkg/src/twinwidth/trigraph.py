"""Trigraphs: graphs whose vertex pairs are black edges, red edges or non-edges.

Vertices are positive integers. Contracting ``u`` and ``v`` keeps the id of
``u`` for the merged vertex (survivor labels).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable


class EdgeKind(enum.Enum):
    BLACK = "black"
    RED = "red"
    ABSENT = "absent"


class TrigraphError(ValueError):
    """Raised on malformed input or a reference to a missing vertex."""


def merged_kind(a: EdgeKind, b: EdgeKind) -> EdgeKind:
    """Kind of ``wx`` after contracting ``u, v`` into ``w``, given ``kind(xu)=a`` and ``kind(xv)=b``."""
    if a is EdgeKind.BLACK and b is EdgeKind.BLACK:
        return EdgeKind.BLACK
    if a is EdgeKind.ABSENT and b is EdgeKind.ABSENT:
        return EdgeKind.ABSENT
    return EdgeKind.RED


class Trigraph:
    """An immutable trigraph.

    Adjacency is kept per vertex as two sets (black and red neighbours);
    absent pairs are implicit. Use :meth:`contract` to get a new trigraph.
    """

    __slots__ = ("_black", "_red")

    def __init__(self, black: dict[int, set[int]], red: dict[int, set[int]]):
        # Internal constructor: callers hand over ownership of the sets.
        self._black = black
        self._red = red

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Trigraph:
        """Ordinary graph on vertices ``1..n`` with the given black edges."""
        if n < 0:
            raise TrigraphError(f"vertex count must be non-negative, got {n}")
        black: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise TrigraphError(f"edge ({u}, {v}): endpoint out of range 1..{n}")
            if u == v:
                raise TrigraphError(f"edge ({u}, {v}): self-loop")
            if v in black[u]:
                raise TrigraphError(f"edge ({u}, {v}): duplicate edge")
            black[u].add(v)
            black[v].add(u)
        return cls(black, {v: set() for v in black})

    @classmethod
    def from_adjacency(
        cls,
        vertices: Iterable[int],
        black_edges: Iterable[tuple[int, int]] = (),
        red_edges: Iterable[tuple[int, int]] = (),
    ) -> Trigraph:
        """Trigraph over arbitrary positive ids, with both black and red edges."""
        black: dict[int, set[int]] = {}
        for v in vertices:
            if v < 1:
                raise TrigraphError(f"vertex ids must be positive, got {v}")
            black[v] = set()
        red: dict[int, set[int]] = {v: set() for v in black}
        for kind, table, edges in (("black", black, black_edges), ("red", red, red_edges)):
            for u, v in edges:
                if u not in black or v not in black:
                    raise TrigraphError(f"{kind} edge ({u}, {v}): unknown endpoint")
                if u == v:
                    raise TrigraphError(f"{kind} edge ({u}, {v}): self-loop")
                if v in black[u] or v in red[u]:
                    raise TrigraphError(f"{kind} edge ({u}, {v}): duplicate edge")
                table[u].add(v)
                table[v].add(u)
        return cls(black, red)

    def copy(self) -> Trigraph:
        return Trigraph(
            {v: set(s) for v, s in self._black.items()},
            {v: set(s) for v, s in self._red.items()},
        )

    # -- queries --------------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._black)

    def __len__(self) -> int:
        return len(self._black)

    def __contains__(self, v: object) -> bool:
        return v in self._black

    def _check(self, v: int) -> None:
        if v not in self._black:
            raise TrigraphError(f"vertex {v} not in trigraph")

    def edge_kind(self, u: int, v: int) -> EdgeKind:
        self._check(u)
        self._check(v)
        if v in self._black[u]:
            return EdgeKind.BLACK
        if v in self._red[u]:
            return EdgeKind.RED
        return EdgeKind.ABSENT

    def neighbours(
        self, v: int, kinds: Iterable[EdgeKind] = (EdgeKind.BLACK, EdgeKind.RED)
    ) -> frozenset[int]:
        self._check(v)
        kinds = set(kinds)
        out: set[int] = set()
        if EdgeKind.BLACK in kinds:
            out |= self._black[v]
        if EdgeKind.RED in kinds:
            out |= self._red[v]
        return frozenset(out)

    def black_neighbours(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self._black[v])

    def red_degree(self, v: int) -> int:
        self._check(v)
        return len(self._red[v])

    def max_red_degree(self) -> int:
        return max((len(s) for s in self._red.values()), default=0)

    def black_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, s in self._black.items() for v in s if u < v)

    def red_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, s in self._red.items() for v in s if u < v)

    def is_ordinary(self) -> bool:
        """True when there are no red edges."""
        return not any(self._red.values())

    def induced_subgraph(self, keep: Iterable[int]) -> Trigraph:
        keep = set(keep)
        for v in keep:
            self._check(v)
        return Trigraph(
            {v: self._black[v] & keep for v in keep},
            {v: self._red[v] & keep for v in keep},
        )

    def relabel(self) -> tuple[Trigraph, dict[int, int]]:
        """Copy with ids ``1..n`` in the original id order, plus the old-to-new map."""
        mapping = {old: new for new, old in enumerate(sorted(self._black), start=1)}
        return (
            Trigraph(
                {mapping[v]: {mapping[x] for x in s} for v, s in self._black.items()},
                {mapping[v]: {mapping[x] for x in s} for v, s in self._red.items()},
            ),
            mapping,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self._black == other._black and self._red == other._red

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.black_edges()), tuple(self.red_edges())))

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={len(self)}, black={len(self.black_edges())}, "
            f"red={len(self.red_edges())})"
        )

    # -- contraction ----------------------------------------------------

    def contract(self, u: int, v: int) -> Trigraph:
        """Return the trigraph with ``u`` and ``v`` merged into ``u``."""
        g = self.copy()
        g._contract_in_place(u, v)
        return g

    def _contract_in_place(self, u: int, v: int) -> set[int]:
        """Merge ``v`` into ``u`` mutating ``self``; return the vertices whose red degree may have changed."""
        if u == v:
            raise TrigraphError(f"cannot contract vertex {u} with itself")
        self._check(u)
        self._check(v)
        black, red = self._black, self._red
        bu, bv = black[u], black[v]
        ru, rv = red[u], red[v]
        touched = (bu | bv | ru | rv) - {u, v}
        new_black = (bu & bv) - {u, v}
        new_red = touched - new_black
        for x in bv | rv:
            black[x].discard(v)
            red[x].discard(v)
        for x in touched:
            if x in new_black:
                black[x].add(u)
                red[x].discard(u)
            else:
                black[x].discard(u)
                red[x].add(u)
        black[u] = new_black
        red[u] = new_red
        del black[v]
        del red[v]
        touched.add(u)
        return touched
