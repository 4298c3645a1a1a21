"""1-skeleton persistent homology along a threshold chain.

This is the comparison method: sweep the edges in weight order, track the
Betti numbers b0 (components) and b1 (independent cycles) of the growing
subgraph, and reduce the trace to a handful of scale-invariant summaries.
Only the 1-skeleton is built, so b1 counts cycles that never die.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInvariantError
from .graphs import UnionFind, WeightedGraph, build_threshold_chain


@dataclass(frozen=True, slots=True)
class PHRecord:
    """State right after event j: normalized threshold and both Betti numbers."""

    j: int
    tau: float
    b0: int
    b1: int


@dataclass(frozen=True)
class PHTrace:
    n: int
    m: int
    records: tuple[PHRecord, ...]


@dataclass(frozen=True)
class PHSummary:
    """Five scalar reductions of a trace.

    auc_b0 integrates b0/n over the sampled thresholds (trapezoidal rule on
    the recorded points), auc_b1 integrates b1 unnormalized. b1_birth_norm is
    the threshold of the first cycle, with 1.0 standing in for "never".
    """

    auc_b0: float
    auc_b1: float
    final_b1: int
    b1_jumps: int
    b1_birth_norm: float


def run_ph_baseline(g: WeightedGraph) -> PHTrace:
    """Record (tau_j, b0, b1) after each insertion of the threshold chain.

    Thresholds are normalized by the largest weight, so they need to be
    positive for tau to land in (0, 1].
    """
    if g.m == 0:
        raise ValueError("baseline needs at least one edge")
    chain = build_threshold_chain(g)
    t_max = chain.events[-1].weight
    if chain.events[0].weight <= 0:
        raise GraphInvariantError("threshold normalization needs positive weights")
    uf = UnionFind(g.n)
    b0 = g.n
    records = []
    for ev in chain:
        if uf.union(ev.u, ev.v):
            b0 -= 1
        b1 = ev.j - g.n + b0
        records.append(PHRecord(ev.j, ev.weight / t_max, b0, b1))
    return PHTrace(n=g.n, m=g.m, records=tuple(records))


def _trapezoid(xs: list[float], ys: list[float]) -> float:
    total = 0.0
    for i in range(len(xs) - 1):
        total += (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / 2.0
    return total


def summarize(trace: PHTrace) -> PHSummary:
    taus = [r.tau for r in trace.records]
    b0_curve = [r.b0 / trace.n for r in trace.records]
    b1_curve = [float(r.b1) for r in trace.records]
    birth = 1.0
    for r in trace.records:
        if r.b1 > 0:
            birth = r.tau
            break
    jumps = 0
    prev = 0
    for r in trace.records:
        if r.b1 > prev:
            jumps += 1
        prev = r.b1
    return PHSummary(
        auc_b0=_trapezoid(taus, b0_curve),
        auc_b1=_trapezoid(taus, b1_curve),
        final_b1=trace.records[-1].b1,
        b1_jumps=jumps,
        b1_birth_norm=birth,
    )
