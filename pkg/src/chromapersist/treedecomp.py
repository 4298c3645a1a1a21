"""Tree decompositions via min-fill elimination, plus a full validity checker."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInvariantError
from .graphs import SimpleGraph


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed 0..k-1 and the tree edges joining them."""

    bags: tuple[frozenset[int], ...]
    tree: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def min_fill_decomposition(h: SimpleGraph) -> TreeDecomposition:
    """Eliminate vertices by minimum fill-in (ties to the smallest id).

    Bag i is the i-th eliminated vertex plus its neighbors at elimination time;
    each bag hangs off the bag of its earliest-eliminated such neighbor.
    """
    n = h.n
    adj = [set(s) for s in h.adjacency()]
    remaining = set(range(n))
    order: list[int] = []
    elim_nbrs: list[set[int]] = []
    while remaining:
        best_v, best_fill = -1, None
        for v in sorted(remaining):
            nbrs = adj[v]
            fill = sum(
                1
                for a in nbrs
                for b in nbrs
                if a < b and b not in adj[a]
            )
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        nbrs = set(adj[best_v])
        order.append(best_v)
        elim_nbrs.append(nbrs)
        for a in nbrs:
            for b in nbrs:
                if a != b:
                    adj[a].add(b)
            adj[a].discard(best_v)
        adj[best_v].clear()
        remaining.discard(best_v)

    pos = {v: i for i, v in enumerate(order)}
    bags = tuple(frozenset({v} | nbrs) for v, nbrs in zip(order, elim_nbrs))
    tree = []
    for i, nbrs in enumerate(elim_nbrs):
        if nbrs:
            tree.append((i, min(pos[u] for u in nbrs)))
        elif i + 1 < n:
            # isolated piece: chain to the next bag to keep the tree connected
            tree.append((i, i + 1))
    td = TreeDecomposition(bags, tuple(tree))
    violations = decomposition_violations(h, td)
    if violations:
        raise GraphInvariantError(f"min-fill produced an invalid decomposition: {violations}")
    return td


def decomposition_violations(h: SimpleGraph, td: TreeDecomposition) -> list[str]:
    """Empty list iff td is a valid tree decomposition of h."""
    out: list[str] = []
    k = len(td.bags)
    if h.n == 0:
        return out if k == 0 and not td.tree else ["nonempty decomposition of empty graph"]
    if k == 0:
        return ["no bags"]
    if len(td.tree) != k - 1:
        out.append(f"tree has {len(td.tree)} edges for {k} bags")
    bag_adj: list[set[int]] = [set() for _ in range(k)]
    for i, j in td.tree:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            out.append(f"bad tree edge {(i, j)}")
            continue
        bag_adj[i].add(j)
        bag_adj[j].add(i)
    # connectivity of the bag tree itself
    seen = {0}
    stack = [0]
    while stack:
        for j in bag_adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != k:
        out.append("bag tree is disconnected")
    covered = set().union(*td.bags) if td.bags else set()
    if covered != set(range(h.n)):
        out.append(f"vertices {sorted(set(range(h.n)) ^ covered)} not covered exactly")
    for u, v in h.edges:
        if not any(u in b and v in b for b in td.bags):
            out.append(f"edge {(u, v)} in no bag")
    for v in range(h.n):
        holding = [i for i, b in enumerate(td.bags) if v in b]
        if not holding:
            continue
        seen_v = {holding[0]}
        stack = [holding[0]]
        holding_set = set(holding)
        while stack:
            for j in bag_adj[stack.pop()]:
                if j in holding_set and j not in seen_v:
                    seen_v.add(j)
                    stack.append(j)
        if len(seen_v) != len(holding):
            out.append(f"bags containing vertex {v} are not connected")
    return out
