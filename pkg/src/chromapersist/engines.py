"""Chromatic polynomial engines and the class-based dispatcher.

Five routes to the same polynomial: closed forms for trees-and-cycles graphs,
a series-parallel reduction, a treewidth partition DP, memoized
deletion-contraction, and a brute-force enumeration oracle kept deliberately
independent of the others for verification.
"""

from __future__ import annotations

from enum import Enum
from math import comb, factorial

from . import kernels
from .canonical import canonical_key, labeled_key
from .errors import EngineUnsupportedError, GraphInvariantError
from .graphs import (
    GraphClass,
    SimpleGraph,
    bridges,
    classify,
    components,
    contract_edge,
    delete_edge,
    induced_subgraph,
)
from .polynomials import (
    FactoredChromatic,
    IntPolynomial,
    falling_factorial,
    lagrange_interpolate,
)
from .treedecomp import TreeDecomposition, decomposition_violations, min_fill_decomposition

CANONICAL_KEY_MAX_N = 10
DEFAULT_WIDTH_CUTOFF = 8
ORACLE_MAX_N = 10

_ONE = IntPolynomial((1,))
_Q = IntPolynomial((0, 1))
_QM1 = IntPolynomial((-1, 1))


class EngineChoice(Enum):
    CLOSED_FORM = "closed_form"
    SERIES_PARALLEL = "series_parallel"
    TREEWIDTH_DP = "treewidth_dp"
    DELETION_CONTRACTION = "deletion_contraction"
    BRUTE_FORCE = "brute_force"


class MemoTable:
    """Cache of chromatic polynomials keyed by graph isomorphism class.

    Keys are exact canonical forms up to CANONICAL_KEY_MAX_N vertices and
    identity-labeled beyond that, so isomorphic minors share entries where the
    canonical form is affordable. Values are immutable polynomials written by
    single atomic dict stores: a concurrent reader can miss and recompute, but
    never observes a torn entry.
    """

    def __init__(self):
        self._table: dict[bytes, IntPolynomial] = {}
        self.hits = 0
        self.misses = 0

    @staticmethod
    def _key(h: SimpleGraph) -> bytes:
        if h.n <= CANONICAL_KEY_MAX_N:
            return canonical_key(h)
        return labeled_key(h)

    def get(self, h: SimpleGraph) -> IntPolynomial | None:
        entry = self._table.get(self._key(h))
        if entry is None:
            self.misses += 1
        else:
            self.hits += 1
        return entry

    def put(self, h: SimpleGraph, poly: IntPolynomial) -> None:
        self._table[self._key(h)] = poly

    def __len__(self) -> int:
        return len(self._table)


def factored_closed_form(h: SimpleGraph) -> FactoredChromatic:
    """Factored chi for graphs whose components are all trees or simple cycles."""
    adj = h.adjacency()
    tree_count = 0
    tree_edges = 0
    cycles: list[int] = []
    for comp in components(h):
        size = len(comp)
        edges = sum(len(adj[v]) for v in comp) // 2
        if edges == size - 1:
            tree_count += 1
            tree_edges += edges
        elif size >= 3 and edges == size and all(len(adj[v]) == 2 for v in comp):
            cycles.append(size)
        else:
            raise EngineUnsupportedError(
                f"component {comp} is neither a tree nor a simple cycle"
            )
    return FactoredChromatic(tree_count, tree_edges, tuple(sorted(cycles)))


def chi_closed_form(h: SimpleGraph) -> IntPolynomial:
    """q^a (q-1)^b times the cycle factors; errors off the supported class."""
    return factored_closed_form(h).expand()


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def chi_series_parallel(h: SimpleGraph) -> IntPolynomial:
    """Value-carrying series-parallel reduction.

    Every surviving logical edge carries the pair (f_eq, f_ne): colorings of
    the structure it replaced, given equal / distinct endpoint colors. Leaves
    contribute f_eq + (q-1) f_ne, series steps sum over the middle vertex's
    color class, parallel steps multiply componentwise, isolated vertices
    contribute q. Graphs that do not dissolve are not series-parallel.
    """
    import heapq

    n = h.n
    adj: list[set[int]] = [set(s) for s in h.adjacency()]
    value: dict[tuple[int, int], tuple[IntPolynomial, IntPolynomial]] = {
        e: (IntPolynomial(), _ONE) for e in h.edges
    }
    acc = _ONE
    dead = [False] * n
    heap = [v for v in range(n) if len(adj[v]) <= 2]
    heapq.heapify(heap)
    remaining = n
    while heap:
        v = heapq.heappop(heap)
        if dead[v] or len(adj[v]) > 2:
            continue
        if not adj[v]:
            acc = acc * _Q
            dead[v] = True
            remaining -= 1
            continue
        if len(adj[v]) == 1:
            a = next(iter(adj[v]))
            f_eq, f_ne = value.pop(_pair(v, a))
            acc = acc * (f_eq + _QM1 * f_ne)
            adj[a].discard(v)
            adj[v].clear()
            dead[v] = True
            remaining -= 1
            if len(adj[a]) <= 2:
                heapq.heappush(heap, a)
            continue
        a, b = sorted(adj[v])
        a_eq, a_ne = value.pop(_pair(v, a))
        b_eq, b_ne = value.pop(_pair(v, b))
        new_eq = a_eq * b_eq + _QM1 * (a_ne * b_ne)
        new_ne = a_eq * b_ne + a_ne * b_eq + (_QM1 - _ONE) * (a_ne * b_ne)
        adj[a].discard(v)
        adj[b].discard(v)
        adj[v].clear()
        dead[v] = True
        remaining -= 1
        key = _pair(a, b)
        if key in value:
            old_eq, old_ne = value[key]
            value[key] = (old_eq * new_eq, old_ne * new_ne)
            # parallel merge: a and b each lost a neighbor
        else:
            value[key] = (new_eq, new_ne)
            adj[a].add(b)
            adj[b].add(a)
        for w in (a, b):
            if len(adj[w]) <= 2:
                heapq.heappush(heap, w)
    if remaining:
        raise EngineUnsupportedError("graph is not series-parallel (reduction stuck)")
    return acc


# ---- treewidth partition DP ----------------------------------------------

Partition = tuple[tuple[int, ...], ...]


def _canon_partition(blocks) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _introduce(table, v: int, bag_before: frozenset[int], adj) -> dict:
    nbrs = adj[v] & bag_before
    out: dict[tuple[Partition, int], int] = {}

    def bump(key, c):
        out[key] = out.get(key, 0) + c

    for (pi, k), cnt in table.items():
        for idx, block in enumerate(pi):
            if nbrs.isdisjoint(block):
                grown = list(pi)
                grown[idx] = tuple(sorted(block + (v,)))
                bump((_canon_partition(grown), k), cnt)
        singleton = _canon_partition(pi + ((v,),))
        off_bag = k - len(pi)
        if off_bag > 0:
            # v joins one of the classes already forgotten below this node;
            # no adjacency check needed since processed neighbors all sit in the bag
            bump((singleton, k), cnt * off_bag)
        bump((singleton, k + 1), cnt)
    return out


def _forget(table, v: int) -> dict:
    out: dict[tuple[Partition, int], int] = {}
    for (pi, k), cnt in table.items():
        blocks = [tuple(x for x in block if x != v) for block in pi]
        key = (_canon_partition(b for b in blocks if b), k)
        out[key] = out.get(key, 0) + cnt
    return out


def _join(t1: dict, t2: dict) -> dict:
    by_pi: dict[Partition, list[tuple[int, int]]] = {}
    for (pi, k), cnt in t2.items():
        by_pi.setdefault(pi, []).append((k, cnt))
    out: dict[tuple[Partition, int], int] = {}
    for (pi, k1), c1 in t1.items():
        shared = len(pi)
        for k2, c2 in by_pi.get(pi, ()):
            a, b = k1 - shared, k2 - shared
            # off-bag classes from the two sides may pairwise merge: no edges
            # cross the join, so any r-matching of them stays proper
            for r in range(min(a, b) + 1):
                ways = comb(a, r) * comb(b, r) * factorial(r)
                key = (pi, k1 + k2 - shared - r)
                out[key] = out.get(key, 0) + c1 * c2 * ways
    return out


def _retarget(table, from_bag: frozenset[int], to_bag: frozenset[int], adj) -> dict:
    bag = from_bag
    for v in sorted(from_bag - to_bag):
        table = _forget(table, v)
        bag = bag - {v}
    for v in sorted(to_bag - from_bag):
        table = _introduce(table, v, bag, adj)
        bag = bag | {v}
    return table


def chi_treewidth_dp(h: SimpleGraph, td: TreeDecomposition | None = None) -> IntPolynomial:
    """Partition DP over a tree decomposition.

    States are (partition of the bag into color classes, total class count);
    the census N_k of proper partitions into k classes is q-free, so it is
    computed once, evaluated via sum_k N_k falling(q, k) at q = 0..n, and
    interpolated back exactly.
    """
    if h.n == 0:
        return _ONE
    if td is None:
        td = min_fill_decomposition(h)
    problems = decomposition_violations(h, td)
    if problems:
        raise GraphInvariantError(f"invalid tree decomposition: {problems}")
    adj = h.adjacency()
    k = len(td.bags)
    bag_adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in td.tree:
        bag_adj[i].append(j)
        bag_adj[j].append(i)

    # preorder from bag 0; reversed, children land before parents
    parent = {0: -1}
    order = [0]
    stack = [0]
    while stack:
        node = stack.pop()
        for nxt in bag_adj[node]:
            if nxt not in parent:
                parent[nxt] = node
                order.append(nxt)
                stack.append(nxt)
    children: dict[int, list[int]] = {i: [] for i in range(k)}
    for node in order[1:]:
        children[parent[node]].append(node)
    tables: dict[int, dict] = {}
    for node in reversed(order):
        acc = None
        for child in children[node]:
            child_table = _retarget(tables.pop(child), td.bags[child], td.bags[node], adj)
            acc = child_table if acc is None else _join(acc, child_table)
        if acc is None:
            acc = _retarget({((), 0): 1}, frozenset(), td.bags[node], adj)
        tables[node] = acc
    root = _retarget(tables.pop(0), td.bags[0], frozenset(), adj)
    counts: dict[int, int] = {}
    for (pi, kk), cnt in root.items():
        counts[kk] = counts.get(kk, 0) + cnt
    points = [
        (q, sum(cnt * falling_factorial(q, kk) for kk, cnt in counts.items()))
        for q in range(h.n + 1)
    ]
    return lagrange_interpolate(points)


# ---- deletion-contraction -------------------------------------------------


def chi_deletion_contraction(h: SimpleGraph, memo: MemoTable | None = None) -> IntPolynomial:
    """Memoized deletion-contraction with forest base cases.

    Pivot is the smallest non-bridge edge, so every recursion step strictly
    reduces the cycle rank on the contract side and the edge count on both.
    """
    if memo is None:
        memo = MemoTable()
    return _chi_dc(h, memo)


def _chi_dc(h: SimpleGraph, memo: MemoTable) -> IntPolynomial:
    comps = components(h)
    if len(comps) > 1:
        poly = _ONE
        for comp in comps:
            poly = poly * _chi_dc_connected(induced_subgraph(h, comp), memo)
        return poly
    return _chi_dc_connected(h, memo)


def _chi_dc_connected(h: SimpleGraph, memo: MemoTable) -> IntPolynomial:
    if h.m == h.n - 1 or h.n <= 1:
        # connected with n-1 edges is a tree (n=1 included)
        return FactoredChromatic(1, h.m).expand() if h.n else _ONE
    cached = memo.get(h)
    if cached is not None:
        return cached
    non_bridges = set(h.edges) - bridges(h)
    pivot = min(non_bridges)
    poly = _chi_dc(delete_edge(h, pivot), memo) - _chi_dc(contract_edge(h, pivot), memo)
    memo.put(h, poly)
    return poly


def chi_bruteforce_oracle(h: SimpleGraph) -> IntPolynomial:
    """Independent ground truth: count proper q-colorings exhaustively for
    q = 0..n and interpolate the unique degree-n polynomial through them.

    Isolated vertices are stripped first (each contributes a bare factor q);
    the remaining counts come from the enumeration kernels, never from the
    engines above. Enforces n <= ORACLE_MAX_N so counts stay within int64.
    """
    if h.n > ORACLE_MAX_N:
        raise EngineUnsupportedError(f"oracle capped at n = {ORACLE_MAX_N}")
    adj = h.adjacency()
    isolated = sum(1 for v in range(h.n) if not adj[v])
    core = h
    if isolated:
        core = induced_subgraph(h, [v for v in range(h.n) if adj[v]])
    points = []
    for q in range(h.n + 1):
        count = kernels.count_proper_colorings(core.n, core.edges, q)
        points.append((q, count * q ** isolated))
    return lagrange_interpolate(points)


def chi_auto(
    h: SimpleGraph,
    memo: MemoTable | None = None,
    width_cutoff: int = DEFAULT_WIDTH_CUTOFF,
) -> tuple[IntPolynomial, EngineChoice]:
    """Dispatch on classify, then decomposition width, then deletion-contraction."""
    cls = classify(h)
    if cls in (GraphClass.FOREST, GraphClass.TREES_AND_CYCLES):
        return chi_closed_form(h), EngineChoice.CLOSED_FORM
    if cls is GraphClass.SERIES_PARALLEL:
        return chi_series_parallel(h), EngineChoice.SERIES_PARALLEL
    td = min_fill_decomposition(h)
    if td.width <= width_cutoff:
        return chi_treewidth_dp(h, td), EngineChoice.TREEWIDTH_DP
    return chi_deletion_contraction(h, memo), EngineChoice.DELETION_CONTRACTION


def chi_with_engine(
    h: SimpleGraph, engine: EngineChoice | str, memo: MemoTable | None = None
) -> tuple[IntPolynomial, EngineChoice]:
    """Run one named engine (or auto-dispatch) and report which one ran."""
    if isinstance(engine, str):
        if engine == "auto":
            return chi_auto(h, memo)
        engine = EngineChoice(engine)
    if engine is EngineChoice.CLOSED_FORM:
        return chi_closed_form(h), engine
    if engine is EngineChoice.SERIES_PARALLEL:
        return chi_series_parallel(h), engine
    if engine is EngineChoice.TREEWIDTH_DP:
        return chi_treewidth_dp(h), engine
    if engine is EngineChoice.DELETION_CONTRACTION:
        return chi_deletion_contraction(h, memo), engine
    return chi_bruteforce_oracle(h), EngineChoice.BRUTE_FORCE
