"""Graph values and the structural operations the engines are built on.

SimpleGraph and WeightedGraph are immutable; edges are canonically ordered
(u < v, lexicographically sorted) so equal graphs compare equal. Vertex ids are
always 0..n-1, and contraction renumbers to keep that invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DuplicateWeightError, GraphInvariantError

Edge = tuple[int, int]


class UnionFind:
    """Array-based disjoint sets with union by size and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _check_edges(n: int, edges: tuple[Edge, ...]) -> None:
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInvariantError(f"edge {e} out of range for n={n}")
        if u == v:
            raise GraphInvariantError(f"loop at vertex {u}")
        if u > v:
            raise GraphInvariantError(f"edge {e} not in canonical (u < v) order")
        if e in seen:
            raise GraphInvariantError(f"duplicate edge {e}")
        seen.add(e)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphInvariantError("n must be nonnegative")
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        _check_edges(self.n, self.edges)

    @classmethod
    def from_edges(cls, n: int, edges) -> SimpleGraph:
        normalized = []
        for u, v in edges:
            if u > v:
                u, v = v, u
            normalized.append((u, v))
        return cls(n, tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        try:
            return self._adj
        except AttributeError:
            pass
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(frozenset(s) for s in nbrs)
        object.__setattr__(self, "_adj", adj)
        return adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency()[u]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph whose edges carry pairwise-distinct real weights."""

    n: int
    edges: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphInvariantError("n must be nonnegative")
        normalized = []
        for u, v, w in self.edges:
            if u > v:
                u, v = v, u
            normalized.append((u, v, float(w)))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))
        _check_edges(self.n, tuple((u, v) for u, v, _ in self.edges))
        weights = [w for _, _, w in self.edges]
        if len(set(weights)) != len(weights):
            dupes = sorted({w for w in weights if weights.count(w) > 1})
            raise DuplicateWeightError(f"duplicate edge weights {dupes}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def simple_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, tuple((u, v) for u, v, _ in self.edges))


@dataclass(frozen=True, slots=True)
class ThresholdEvent:
    """The j-th edge arrival in weight order (j starts at 1)."""

    j: int
    u: int
    v: int
    weight: float


@dataclass(frozen=True)
class ThresholdChain:
    """Edges of a weighted graph sorted by strictly increasing weight."""

    n: int
    events: tuple[ThresholdEvent, ...]

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def subgraph(self, j: int) -> SimpleGraph:
        """The graph H_j spanned by the first j events on all n vertices."""
        if not 0 <= j <= len(self.events):
            raise ValueError(f"j must be in 0..{len(self.events)}")
        return SimpleGraph(self.n, tuple((e.u, e.v) for e in self.events[:j]))


def build_threshold_chain(g: WeightedGraph) -> ThresholdChain:
    ordered = sorted(g.edges, key=lambda e: e[2])
    for a, b in zip(ordered, ordered[1:]):
        if a[2] == b[2]:
            raise DuplicateWeightError(f"duplicate weight {a[2]}")
    events = tuple(
        ThresholdEvent(j, u, v, w) for j, (u, v, w) in enumerate(ordered, start=1)
    )
    return ThresholdChain(g.n, events)


def delete_edge(h: SimpleGraph, e: Edge) -> SimpleGraph:
    u, v = min(e), max(e)
    if (u, v) not in h.edges:
        raise GraphInvariantError(f"edge {(u, v)} not in graph")
    return SimpleGraph(h.n, tuple(x for x in h.edges if x != (u, v)))


def contract_edge(h: SimpleGraph, e: Edge) -> SimpleGraph:
    """Contract e, keeping the smaller endpoint's id; ids above the larger shift down.

    Parallel edges created by the identification collapse (the result is simple).
    """
    u, v = min(e), max(e)
    if (u, v) not in h.edges:
        raise GraphInvariantError(f"edge {(u, v)} not in graph")
    out = set()
    for a, b in h.edges:
        if (a, b) == (u, v):
            continue
        if a == v:
            a = u
        if b == v:
            b = u
        if a > v:
            a -= 1
        if b > v:
            b -= 1
        if a == b:
            raise GraphInvariantError("contraction produced a loop on a simple graph")
        out.add((min(a, b), max(a, b)))
    return SimpleGraph(h.n - 1, tuple(out))


def components(h: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by smallest member."""
    uf = UnionFind(h.n)
    for u, v in h.edges:
        uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(uf.find(v), []).append(v)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: g[0]))


def induced_subgraph(h: SimpleGraph, vertices) -> SimpleGraph:
    """Subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = tuple(
        (index[u], index[v]) for u, v in h.edges if u in index and v in index
    )
    return SimpleGraph(len(vs), edges)


def cycle_rank(h: SimpleGraph) -> int:
    return h.m - h.n + len(components(h))


def is_connected(h: SimpleGraph) -> bool:
    return len(components(h)) <= 1


def bridges(h: SimpleGraph) -> frozenset[Edge]:
    """Edges whose removal disconnects their component (iterative lowpoint DFS)."""
    adj = h.adjacency()
    disc = [-1] * h.n
    low = [0] * h.n
    out: set[Edge] = set()
    timer = 0
    for start in range(h.n):
        if disc[start] != -1:
            continue
        stack: list[tuple[int, int, object]] = [(start, -1, iter(adj[start]))]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add((min(v, parent), max(v, parent)))
    return frozenset(out)


class GraphClass(Enum):
    FOREST = "forest"
    TREES_AND_CYCLES = "trees_and_cycles"
    SERIES_PARALLEL = "series_parallel"
    GENERAL = "general"


def _dissolves_by_reduction(h: SimpleGraph) -> bool:
    # Duffin: series-parallel iff repeated removal of degree<=1 vertices and
    # suppression of degree-2 vertices (merging any parallel pair) empties the graph.
    adj = [set(s) for s in h.adjacency()]
    alive = set(range(h.n))
    queue = [v for v in alive if len(adj[v]) <= 2]
    while queue:
        v = queue.pop()
        if v not in alive or len(adj[v]) > 2:
            continue
        nbrs = list(adj[v])
        alive.discard(v)
        for w in nbrs:
            adj[w].discard(v)
        adj[v].clear()
        if len(nbrs) == 2:
            a, b = nbrs
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
            # a parallel pair just merges, so degrees only drop
        for w in nbrs:
            if w in alive and len(adj[w]) <= 2:
                queue.append(w)
    return not alive


def classify(h: SimpleGraph) -> GraphClass:
    """Coarse engine-dispatch class: forest, trees-plus-cycles, series-parallel, general."""
    comps = components(h)
    adj = h.adjacency()
    edge_sets = {c: 0 for c in comps}
    lookup = {}
    for c in comps:
        for v in c:
            lookup[v] = c
    for u, v in h.edges:
        edge_sets[lookup[u]] += 1
    if all(edge_sets[c] == len(c) - 1 for c in comps):
        return GraphClass.FOREST
    trees_and_cycles = all(
        edge_sets[c] == len(c) - 1
        or (len(c) >= 3 and edge_sets[c] == len(c) and all(len(adj[v]) == 2 for v in c))
        for c in comps
    )
    if trees_and_cycles:
        return GraphClass.TREES_AND_CYCLES
    if _dissolves_by_reduction(h):
        return GraphClass.SERIES_PARALLEL
    return GraphClass.GENERAL
