"""Shared preparation for the counting kernels."""

from __future__ import annotations

import numpy as np


def visit_order(n: int, edges) -> list[int]:
    """Order vertices so each has many already-placed neighbors (prunes early)."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    placed: list[int] = []
    placed_set: set[int] = set()
    while len(placed) < n:
        best = max(
            (v for v in range(n) if v not in placed_set),
            key=lambda v: (len(adj[v] & placed_set), len(adj[v]), -v),
        )
        placed.append(best)
        placed_set.add(best)
    return placed


def lower_neighbor_masks(n: int, edges, order: list[int]) -> np.ndarray:
    """masks[i] has bit j set iff the vertices at positions i > j are adjacent."""
    if n > 63:
        raise ValueError("kernels support at most 63 vertices")
    pos = {v: i for i, v in enumerate(order)}
    masks = np.zeros(n, dtype=np.int64)
    for u, v in edges:
        i, j = pos[u], pos[v]
        if i < j:
            i, j = j, i
        masks[i] |= 1 << j
    return masks
