import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twinwidth import (
    LbParameterError,
    LbParameters,
    build_lb_graph,
    build_lb_schedule,
    build_lb_sequence,
    dedupe_and_extend,
    min_k,
    min_twin_pair_vertex,
    nu_upper_bound,
    partition_at_step,
    predicted_partition,
    replay_and_verify,
    verify_lb,
)


def brute_triples(A, B, C, k):
    return [
        (i, j, t)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        for t in range(1, k + 1)
        if i <= j <= i + A - 1 and j + 2 <= t <= j + 1 + B and t <= k - C
    ]


def test_min_k():
    assert min_k(3) == 6
    for d in range(3, 60):
        assert min_k(d) == math.ceil(d + 2 * math.sqrt(d - 2) + 1 - 1e-12)
    with pytest.raises(LbParameterError):
        min_k(2)


def test_d3_k6():
    p = LbParameters.from_d(3, 6)
    assert (p.A, p.B, p.C, p.M) == (1, 1, 1, 3)
    assert p.triples() == [(1, 1, 3), (2, 2, 4), (3, 3, 5)]
    lb = build_lb_graph(p)
    assert len(lb.graph) == 12 and len(lb.index) == 6
    seq = build_lb_sequence(p, lb)
    assert len(seq) == 11
    assert replay_and_verify(lb.graph, seq, 3).valid


def test_explicit_mode_triples():
    p = LbParameters(A=2, B=1, C=1, k=8)
    assert len(p.triples()) == 9 == len(brute_triples(2, 1, 1, 8))
    assert len(build_lb_graph(p).index) == 18


def test_rejects_small_k():
    with pytest.raises(LbParameterError, match="threshold"):
        LbParameters.from_d(3, 5)
    with pytest.raises(LbParameterError, match="C\\+3"):
        LbParameters(A=1, B=1, C=2, k=4)
    with pytest.raises(LbParameterError, match="A must"):
        LbParameters(A=0, B=1, C=1, k=8)
    with pytest.raises(LbParameterError, match="d must"):
        LbParameters.from_d(2, 10)


def test_d6_k40():
    r = verify_lb(LbParameters.from_d(6, 40))
    assert (r.params.A, r.params.B, r.params.C) == (2, 2, 4)
    assert r.non_x_count == 16 * len(brute_triples(2, 2, 4, 40))
    assert r.all_distinct
    assert r.sequence_valid and r.width <= 6


def test_report_flags_width():
    p = LbParameters(A=3, B=2, C=1, k=9, d=5)
    assert p.M == 8 and p.exceeds_width(5)
    assert verify_lb(p).as_dict()["exceeds_target_width"] is True


def test_claim_bound_on_g36():
    p = LbParameters.from_d(3, 6)
    lb = build_lb_graph(p)
    h = dedupe_and_extend(lb.graph, lb.X)
    x, t = min_twin_pair_vertex(h, lb.X)
    assert t <= nu_upper_bound(3, 1) == 80
    assert (x, t) == (1, 0)


def test_mismatched_graph():
    p = LbParameters.from_d(3, 6)
    lb = build_lb_graph(LbParameters.from_d(3, 7))
    with pytest.raises(LbParameterError):
        build_lb_sequence(p, lb)


explicit_params = st.builds(
    lambda A, B, C, extra: LbParameters(A=A, B=B, C=C, k=C + 3 + extra),
    st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(0, 8),
)


@settings(max_examples=60, deadline=None)
@given(explicit_params)
def test_structure(p):
    lb = build_lb_graph(p)
    g, X = lb.graph, frozenset(lb.X)
    assert p.triples() == brute_triples(p.A, p.B, p.C, p.k)
    assert all(len(members) == 2**p.C for members in lb.groups.values())
    for x in X:
        assert not (g.black_neighbours(x) & X)
    traces = {}
    for v, (i, j, t, ymask) in lb.index.items():
        nb = sorted(g.black_neighbours(v))
        assert nb == lb.neighbourhood_of(i, j, t, ymask)
        # Interval, gap, x_t, then a subset of the next C.
        assert nb[: j - i + 1] == list(range(i, j + 1))
        assert nb[j - i + 1] == t >= j + 2
        assert all(t < y <= t + p.C for y in nb[j - i + 2:])
        traces[tuple(nb)] = v
    assert len(traces) == len(lb.index)


@settings(max_examples=40, deadline=None)
@given(explicit_params)
def test_sequence_width_and_schedule(p):
    lb = build_lb_graph(p)
    schedule = build_lb_schedule(p, lb)
    report = replay_and_verify(lb.graph, schedule.sequence, p.M)
    assert report.valid, report
    for ell, step in enumerate(schedule.phase_ends):
        assert partition_at_step(lb.graph, schedule.sequence, step) == predicted_partition(lb, ell)


def test_growth_small():
    r = verify_lb(LbParameters.from_d(6, 24), replay=False)
    assert r.ratio == Fraction(r.distinct_count, 6 * 64 * 24)
    assert r.distinct_count == r.non_x_count + 1
