"""Exact canonical forms for small graphs, used as memo keys.

canonical_key returns bytes equal for two graphs iff they are isomorphic
(vertex counts are baked into the key). Colors are refined by neighborhood
multisets until stable; remaining symmetric classes are broken by
individualizing every member and taking the lexicographically smallest
adjacency bitstring over all resulting discrete orderings. No pruning, so
correctness does not depend on search order. Intended for n <= ~10; complete
and edgeless graphs short-circuit since any ordering is already canonical.
"""

from __future__ import annotations

from .graphs import SimpleGraph


def _refine(adj: tuple[frozenset[int], ...], colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [order[s] for s in sigs]
        if len(set(new_colors)) == len(set(colors)):
            return new_colors
        colors = new_colors


def _adjacency_bits(adj, ordering: list[int]) -> int:
    n = len(ordering)
    bits = 0
    pos = 0
    for i in range(n):
        vi = ordering[i]
        for j in range(i + 1, n):
            if ordering[j] in adj[vi]:
                bits |= 1 << pos
            pos += 1
    return bits


def _search(adj, colors: list[int]) -> int:
    colors = _refine(adj, colors)
    n = len(colors)
    if len(set(colors)) == n:
        ordering = sorted(range(n), key=lambda v: colors[v])
        return _adjacency_bits(adj, ordering)
    # first non-singleton class; individualize each member in turn
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    target = by_color[min(c for c, vs in by_color.items() if len(vs) > 1)]
    best = None
    for v in target:
        child = list(colors)
        child[v] = -1  # unique marker; refinement renumbers canonically
        cand = _search(adj, child)
        if best is None or cand < best:
            best = cand
    return best


def canonical_key(h: SimpleGraph) -> bytes:
    """Bytes identifying h up to isomorphism; collisions are impossible."""
    try:
        return h._canon
    except AttributeError:
        pass
    n = h.n
    nbytes = (n * (n - 1) // 2 + 7) // 8
    if h.m in (0, n * (n - 1) // 2):
        bits = _adjacency_bits(h.adjacency(), list(range(n)))
    else:
        bits = _search(h.adjacency(), [0] * n)
    key = n.to_bytes(2, "big") + bits.to_bytes(max(nbytes, 1), "big")
    object.__setattr__(h, "_canon", key)
    return key


def labeled_key(h: SimpleGraph) -> bytes:
    """Identity-labeled key: equal iff the labeled edge sets are equal."""
    return b"L" + h.n.to_bytes(4, "big") + b"".join(
        u.to_bytes(4, "big") + v.to_bytes(4, "big") for u, v in h.edges
    )
