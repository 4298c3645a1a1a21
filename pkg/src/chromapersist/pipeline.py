"""Event-driven persistence over a weighted graph's threshold chain.

Each event j adds the j-th cheapest edge. The diagonal E-polynomial starts at
s^n and drops by the jump Delta_j = chi(H_j / e_j)(s); the barcode zeta
accumulates a factor (1 - T^j)^(-Delta_j). While every component stays a tree
or a simple cycle the loop runs on an O(alpha) union-find census emitting
factored polynomials; the first event outside that class switches permanently
to dense arithmetic with engine dispatch.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .conversions import DiagonalEPolynomial
from .engines import (
    DEFAULT_WIDTH_CUTOFF,
    ORACLE_MAX_N,
    EngineChoice,
    MemoTable,
    chi_auto,
    chi_bruteforce_oracle,
)
from .errors import ConsistencyError, EngineUnsupportedError
from .graphs import (
    SimpleGraph,
    UnionFind,
    WeightedGraph,
    build_threshold_chain,
    contract_edge,
)
from .polynomials import FactoredChromatic, IntPolynomial, RationalPolynomial

_RONE = RationalPolynomial((Fraction(1),))
_RZERO = RationalPolynomial()


@dataclass(frozen=True)
class BarcodeZeta:
    """Z(T) = prod_j (1 - T^j)^(-Delta_j) truncated at T^truncation.

    coeffs[i] is the polynomial in s multiplying T^i; coeffs[0] is always 1,
    and the T^j coefficient only ever involves jumps from events <= j.
    """

    truncation: int
    coeffs: tuple[RationalPolynomial, ...]

    @classmethod
    def identity(cls, truncation: int) -> BarcodeZeta:
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        return cls(truncation, (_RONE,) + (_RZERO,) * truncation)


def zeta_update(z: BarcodeZeta, j: int, delta: IntPolynomial) -> BarcodeZeta:
    """Multiply in (1 - T^j)^(-delta) = sum_k C(delta+k-1, k) T^(jk), truncated.

    The generalized binomial C(delta+k-1, k) is built by the rational
    recurrence B_k = B_(k-1) (delta + k - 1) / k, so coefficients stay exact.
    """
    if j <= 0:
        raise ValueError("event index must be positive")
    kmax = z.truncation // j
    if kmax == 0:
        return z
    d = RationalPolynomial.from_int_polynomial(delta)
    series = [_RONE]
    for k in range(1, kmax + 1):
        series.append(series[-1] * (d + RationalPolynomial((Fraction(k - 1),))) * Fraction(1, k))
    out = [_RZERO] * (z.truncation + 1)
    for i, c in enumerate(z.coeffs):
        if c.is_zero():
            continue
        for k in range(kmax + 1):
            pos = i + j * k
            if pos > z.truncation:
                break
            out[pos] = out[pos] + c * series[k]
    return BarcodeZeta(z.truncation, tuple(out))


@dataclass(frozen=True, slots=True)
class EngineStep:
    j: int
    engine: EngineChoice
    seconds: float


@dataclass(frozen=True)
class PersistenceResult:
    """Everything the filtration produced, in event order.

    e_polynomials has m+1 entries (E_0 = s^n first); jumps and engine_log have
    one entry per event. Weights are deliberately absent: the result depends
    only on the edge order, so two schedules with the same order compare equal.
    """

    n: int
    event_edges: tuple[tuple[int, int], ...]
    e_polynomials: tuple[DiagonalEPolynomial, ...]
    jumps: tuple[DiagonalEPolynomial, ...]
    zeta: BarcodeZeta
    engine_log: tuple[EngineStep, ...]


_TREE, _CYCLE, _BAD = 0, 1, 2


class _Census:
    """Incremental component census backing the closed-form fast path.

    Per component root: size (from the union-find), edge count, max degree.
    Component statuses only move tree -> cycle -> bad, so totals maintained
    here stay exact under edge additions alone.
    """

    __slots__ = (
        "uf", "degree", "comp_edges", "comp_maxdeg", "comp_status",
        "cycle_lengths", "cycle_count", "cycle_edge_sum",
        "bad_count", "bad_edges", "total_comps", "total_edges", "n",
    )

    def __init__(self, n: int):
        self.n = n
        self.uf = UnionFind(n)
        self.degree = [0] * n
        self.comp_edges = [0] * n
        self.comp_maxdeg = [0] * n
        self.comp_status = [_TREE] * n
        self.cycle_lengths: Counter[int] = Counter()
        self.cycle_count = 0
        self.cycle_edge_sum = 0
        self.bad_count = 0
        self.bad_edges = 0
        self.total_comps = n
        self.total_edges = 0

    def _clear(self, root: int) -> None:
        status = self.comp_status[root]
        if status == _CYCLE:
            k = self.uf.size[root]
            self.cycle_lengths[k] -= 1
            if not self.cycle_lengths[k]:
                del self.cycle_lengths[k]
            self.cycle_count -= 1
            self.cycle_edge_sum -= k
        elif status == _BAD:
            self.bad_count -= 1
            self.bad_edges -= self.comp_edges[root]

    def _apply(self, root: int) -> None:
        size = self.uf.size[root]
        edges = self.comp_edges[root]
        if edges == size - 1:
            self.comp_status[root] = _TREE
        elif edges == size and self.comp_maxdeg[root] == 2:
            self.comp_status[root] = _CYCLE
            self.cycle_lengths[size] += 1
            self.cycle_count += 1
            self.cycle_edge_sum += size
        else:
            self.comp_status[root] = _BAD
            self.bad_count += 1
            self.bad_edges += edges

    def add_edge(self, u: int, v: int) -> None:
        self.degree[u] += 1
        self.degree[v] += 1
        self.total_edges += 1
        ru, rv = self.uf.find(u), self.uf.find(v)
        if ru == rv:
            self._clear(ru)
            self.comp_edges[ru] += 1
            self.comp_maxdeg[ru] = max(self.comp_maxdeg[ru], self.degree[u], self.degree[v])
            self._apply(ru)
            return
        self._clear(ru)
        self._clear(rv)
        edges = self.comp_edges[ru] + self.comp_edges[rv] + 1
        maxdeg = max(self.comp_maxdeg[ru], self.comp_maxdeg[rv], self.degree[u], self.degree[v])
        self.uf.union(u, v)
        root = self.uf.find(u)
        self.comp_edges[root] = edges
        self.comp_maxdeg[root] = maxdeg
        self.total_comps -= 1
        self._apply(root)

    @property
    def all_closed(self) -> bool:
        return self.bad_count == 0

    def _tree_stats(self) -> tuple[int, int]:
        tree_edges = self.total_edges - self.cycle_edge_sum - self.bad_edges
        tree_comps = self.total_comps - self.cycle_count - self.bad_count
        return tree_comps, tree_edges

    def factored_state(self) -> FactoredChromatic:
        tree_comps, tree_edges = self._tree_stats()
        return FactoredChromatic(
            tree_comps, tree_edges, tuple(sorted(self.cycle_lengths.elements()))
        )

    def contracted_state(self, u: int) -> FactoredChromatic:
        """Factored chi of the current graph with u's newest edge contracted."""
        root = self.uf.find(u)
        tree_comps, tree_edges = self._tree_stats()
        status = self.comp_status[root]
        if status == _TREE:
            return FactoredChromatic(
                tree_comps, tree_edges - 1, tuple(sorted(self.cycle_lengths.elements()))
            )
        k = self.uf.size[root]
        rest = self.cycle_lengths - Counter({k: 1})
        if k - 1 >= 3:
            rest[k - 1] += 1
            return FactoredChromatic(tree_comps, tree_edges, tuple(sorted(rest.elements())))
        return FactoredChromatic(tree_comps + 1, tree_edges + 1, tuple(sorted(rest.elements())))


def run_persistence(
    g: WeightedGraph,
    *,
    zeta_truncation: int | None = None,
    memo: MemoTable | None = None,
    width_cutoff: int = DEFAULT_WIDTH_CUTOFF,
) -> PersistenceResult:
    """Run the full event loop; zeta_truncation defaults to the edge count m."""
    chain = build_threshold_chain(g)
    n = g.n
    m = len(chain)
    truncation = m if zeta_truncation is None else zeta_truncation
    if memo is None:
        memo = MemoTable()
    zeta = BarcodeZeta.identity(truncation)
    e_polys: list[DiagonalEPolynomial] = [
        DiagonalEPolynomial.from_factored(FactoredChromatic(n, 0))
    ]
    jumps: list[DiagonalEPolynomial] = []
    log: list[EngineStep] = []
    census = _Census(n)
    edges_so_far: list[tuple[int, int]] = []
    dense_mode = False
    for ev in chain:
        t0 = time.perf_counter()
        edges_so_far.append((ev.u, ev.v))
        census.add_edge(ev.u, ev.v)
        if not dense_mode and census.all_closed:
            delta = DiagonalEPolynomial.from_factored(census.contracted_state(ev.u))
            new_e = DiagonalEPolynomial.from_factored(census.factored_state())
            engine = EngineChoice.CLOSED_FORM
        else:
            dense_mode = True
            h = SimpleGraph.from_edges(n, edges_so_far)
            contraction = contract_edge(h, (ev.u, ev.v))
            delta_poly, engine = chi_auto(contraction, memo, width_cutoff)
            delta = DiagonalEPolynomial.from_dense(delta_poly)
            new_e = DiagonalEPolynomial.from_dense(e_polys[-1].poly - delta_poly)
        elapsed = time.perf_counter() - t0
        if delta.degree != n - 1:
            raise ConsistencyError(f"event {ev.j}: jump degree {delta.degree} != {n - 1}")
        if new_e.degree != n:
            raise ConsistencyError(f"event {ev.j}: E degree {new_e.degree} != {n}")
        if truncation // ev.j > 0:
            zeta = zeta_update(zeta, ev.j, delta.poly)
        e_polys.append(new_e)
        jumps.append(delta)
        log.append(EngineStep(ev.j, engine, elapsed))
    return PersistenceResult(
        n=n,
        event_edges=tuple((ev.u, ev.v) for ev in chain),
        e_polynomials=tuple(e_polys),
        jumps=tuple(jumps),
        zeta=zeta,
        engine_log=tuple(log),
    )


@dataclass(frozen=True)
class OracleReport:
    """Outcome of replaying a result against the brute-force oracle."""

    ok: bool
    events_checked: int
    first_divergence: dict | None


def verify_against_oracle(g: WeightedGraph, *, width_cutoff: int = DEFAULT_WIDTH_CUTOFF) -> OracleReport:
    """Recompute every E_j and Delta_j with the enumeration oracle and compare."""
    if g.n > ORACLE_MAX_N:
        raise EngineUnsupportedError(f"oracle verification capped at n = {ORACLE_MAX_N}")
    result = run_persistence(g, width_cutoff=width_cutoff)
    chain = build_threshold_chain(g)
    checked = 0
    for ev in chain:
        h = chain.subgraph(ev.j)
        expected_e = chi_bruteforce_oracle(h)
        expected_delta = chi_bruteforce_oracle(contract_edge(h, (ev.u, ev.v)))
        got_e = result.e_polynomials[ev.j].poly
        got_delta = result.jumps[ev.j - 1].poly
        for field, got, expected in (
            ("E", got_e, expected_e),
            ("delta", got_delta, expected_delta),
        ):
            if got != expected:
                return OracleReport(
                    ok=False,
                    events_checked=checked,
                    first_divergence={
                        "j": ev.j,
                        "field": field,
                        "got": list(got.coeffs),
                        "expected": list(expected.coeffs),
                    },
                )
        checked += 1
    return OracleReport(ok=True, events_checked=checked, first_divergence=None)
