"""Bitmask trigraph states for the search routines.

Vertex ``i`` of an ``n``-vertex state is bit ``i``; ``black[i]`` and
``red[i]`` are neighbour masks and ``live`` marks vertices not yet merged
away. States are tuples so they can be hashed and shared between branches.
"""

from __future__ import annotations

from typing import NamedTuple

from .trigraph import Trigraph


class BitState(NamedTuple):
    black: tuple[int, ...]
    red: tuple[int, ...]
    live: int


def from_trigraph(g: Trigraph) -> tuple[BitState, list[int]]:
    """Encode ``g``; index ``i`` stands for the ``i``-th smallest vertex id."""
    ids = sorted(g.vertices)
    index = {v: i for i, v in enumerate(ids)}
    black = [0] * len(ids)
    red = [0] * len(ids)
    for u, v in g.black_edges():
        black[index[u]] |= 1 << index[v]
        black[index[v]] |= 1 << index[u]
    for u, v in g.red_edges():
        red[index[u]] |= 1 << index[v]
        red[index[v]] |= 1 << index[u]
    return BitState(tuple(black), tuple(red), (1 << len(ids)) - 1), ids


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def live_vertices(state: BitState) -> list[int]:
    return list(bits(state.live))


def max_red(state: BitState) -> int:
    return max((state.red[i].bit_count() for i in bits(state.live)), default=0)


def contract(state: BitState, u: int, v: int) -> tuple[BitState, int]:
    """Merge ``v`` into ``u``. Returns the new state and its maximum red degree."""
    black, red = list(state.black), list(state.red)
    bu, bv = 1 << u, 1 << v
    live = state.live & ~bv
    others = live & ~bu
    new_black = black[u] & black[v] & others
    new_red = ((black[u] | red[u] | black[v] | red[v]) & others) & ~new_black
    black[u], red[u] = new_black, new_red
    black[v] = red[v] = 0
    clear = ~(bu | bv)
    worst = new_red.bit_count()
    for x in bits(others):
        b = black[x] & clear
        r = red[x] & clear
        if new_black >> x & 1:
            b |= bu
        elif new_red >> x & 1:
            r |= bu
        black[x], red[x] = b, r
        c = r.bit_count()
        if c > worst:
            worst = c
    return BitState(tuple(black), tuple(red), live), worst


def twins(state: BitState, u: int, v: int) -> bool:
    """True when ``u`` and ``v`` agree on every other vertex (black and red alike)."""
    mask = ~((1 << u) | (1 << v))
    return (
        state.black[u] & mask == state.black[v] & mask
        and state.red[u] & mask == state.red[v] & mask
    )


def canonical_key(state: BitState) -> tuple:
    """Relabelling-invariant-ish key: equal keys imply isomorphic states.

    Vertices are ordered by colour refinement on (black, red) adjacency,
    ties broken by index, and the adjacency is rewritten in that order.
    """
    verts = live_vertices(state)
    colour = {x: (state.black[x].bit_count(), state.red[x].bit_count()) for x in verts}
    n_classes = len(set(colour.values()))
    while True:
        sig = {
            x: (
                colour[x],
                tuple(sorted(colour[y] for y in bits(state.black[x]))),
                tuple(sorted(colour[y] for y in bits(state.red[x]))),
            )
            for x in verts
        }
        ranks = {s: r for r, s in enumerate(sorted(set(sig.values())))}
        refined = {x: (ranks[sig[x]],) for x in verts}
        if len(ranks) == n_classes:
            colour = refined
            break
        colour, n_classes = refined, len(ranks)
    order = sorted(verts, key=lambda x: (colour[x], x))
    pos = {x: i for i, x in enumerate(order)}

    def remap(mask: int) -> int:
        out = 0
        for y in bits(mask):
            out |= 1 << pos[y]
        return out

    return tuple((remap(state.black[x]), remap(state.red[x])) for x in order)
