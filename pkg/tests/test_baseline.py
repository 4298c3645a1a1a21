"""Persistent homology baseline.

Core claims:
- the trace obeys b1_j - b0_j = j - n at every event (Euler relation)
- b0 never increases and b1 never decreases along the chain
- cycle schedules of different lengths produce the same summary triple,
  which is exactly the blind spot the pipeline is meant to avoid
- summaries are invariant under positive rescaling of the weights
"""

from __future__ import annotations

import random

import pytest

from chromapersist.baseline import run_ph_baseline, summarize
from chromapersist.errors import GraphInvariantError
from chromapersist.graphs import SimpleGraph, WeightedGraph, components, cycle_rank
from helpers import random_weighted_graph


def _cycle_closer_last(n: int) -> WeightedGraph:
    edges = [(i, i + 1, 0.1 + 0.05 * i) for i in range(n - 1)]
    edges.append((0, n - 1, 0.95))
    return WeightedGraph(n, tuple(edges))


def test_single_edge():
    trace = run_ph_baseline(WeightedGraph(2, ((0, 1, 0.7),)))
    assert trace.records == (type(trace.records[0])(1, 1.0, 1, 0),)
    s = summarize(trace)
    assert (s.auc_b0, s.auc_b1) == (0.0, 0.0)
    assert (s.final_b1, s.b1_jumps, s.b1_birth_norm) == (0, 0, 1.0)


def test_two_edge_forest():
    g = WeightedGraph(4, ((0, 1, 0.2), (2, 3, 0.4)))
    trace = run_ph_baseline(g)
    assert [(r.b0, r.b1) for r in trace.records] == [(3, 0), (2, 0)]
    s = summarize(trace)
    assert s.final_b1 == 0
    assert s.b1_jumps == 0
    assert s.b1_birth_norm == 1.0


def test_cycle_birth_at_last_event():
    trace = run_ph_baseline(_cycle_closer_last(5))
    assert [r.b1 for r in trace.records] == [0, 0, 0, 0, 1]
    assert trace.records[-1].tau == 1.0
    s5 = summarize(trace)
    s6 = summarize(run_ph_baseline(_cycle_closer_last(6)))
    triple5 = (s5.final_b1, s5.b1_jumps, s5.b1_birth_norm)
    triple6 = (s6.final_b1, s6.b1_jumps, s6.b1_birth_norm)
    assert triple5 == (1, 1, 1.0)
    assert triple5 == triple6


def test_auc_frozen_values():
    g = WeightedGraph(3, ((0, 1, 0.5), (1, 2, 1.0)))
    s = summarize(run_ph_baseline(g))
    assert s.auc_b0 == pytest.approx(0.25)
    assert s.auc_b1 == 0.0
    g4 = WeightedGraph(4, ((0, 1, 0.25), (1, 2, 0.5), (2, 3, 0.75), (0, 3, 1.0)))
    s4 = summarize(run_ph_baseline(g4))
    assert s4.auc_b0 == pytest.approx(0.3125)
    assert s4.auc_b1 == pytest.approx(0.125)


def test_euler_relation_and_monotonicity():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = random_weighted_graph(rng, n, rng.randint(0, 6))
        if g.m == 0:
            continue
        trace = run_ph_baseline(g)
        sub_edges = []
        prev_b0, prev_b1 = n, 0
        order = sorted(g.edges, key=lambda e: e[2])
        for r, (u, v, _) in zip(trace.records, order):
            sub_edges.append((u, v) if u < v else (v, u))
            h = SimpleGraph.from_edges(n, sub_edges)
            assert r.b0 == len(components(h))
            assert r.b1 == cycle_rank(h)
            assert r.b1 - r.b0 == r.j - n
            assert r.b0 <= prev_b0
            assert r.b1 >= prev_b1
            prev_b0, prev_b1 = r.b0, r.b1


def test_scale_invariance():
    rng = random.Random(37)
    g = random_weighted_graph(rng, 7, 4)
    scaled = WeightedGraph(g.n, tuple((u, v, 3.75 * w) for u, v, w in g.edges))
    a = summarize(run_ph_baseline(g))
    b = summarize(run_ph_baseline(scaled))
    assert (a.final_b1, a.b1_jumps) == (b.final_b1, b.b1_jumps)
    assert a.auc_b0 == pytest.approx(b.auc_b0)
    assert a.auc_b1 == pytest.approx(b.auc_b1)
    assert a.b1_birth_norm == pytest.approx(b.b1_birth_norm)
    taus = [r.tau for r in run_ph_baseline(g).records]
    taus_scaled = [r.tau for r in run_ph_baseline(scaled).records]
    assert taus == pytest.approx(taus_scaled)


def test_preconditions():
    with pytest.raises(ValueError):
        run_ph_baseline(WeightedGraph(3))
    with pytest.raises(GraphInvariantError):
        run_ph_baseline(WeightedGraph(2, ((0, 1, -0.5),)))
