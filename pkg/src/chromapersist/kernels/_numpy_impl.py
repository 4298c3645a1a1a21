"""Pure-numpy counting kernels, signature-identical to the numba backend.

Enumeration runs in vectorized chunks instead of compiled loops: colorings via
a base-q odometer over all but one vertex (the last vertex is closed out with a
color-bitmask popcount), orientations via vectorized repeated sink removal.
"""

from __future__ import annotations

import numpy as np

from ._common import lower_neighbor_masks, visit_order

BACKEND = "numpy"

MAX_ORIENTATION_EDGES = 24

_CHUNK = 1 << 15


def count_proper_colorings(n: int, edges, q: int) -> int:
    """Proper q-colorings of the simple graph (n, edges), by exhaustive enumeration."""
    if n < 0 or q < 0:
        raise ValueError("n and q must be nonnegative")
    if n == 0:
        return 1
    if q == 0:
        return 0
    if n == 1:
        return q
    if q > 20:
        raise ValueError("numpy backend caps q at 20")
    order = visit_order(n, edges)
    masks = lower_neighbor_masks(n, edges, order)
    prefix_edges = [
        (j, i)
        for i in range(n - 1)
        for j in range(i)
        if (int(masks[i]) >> j) & 1
    ]
    last_nbrs = [j for j in range(n - 1) if (int(masks[n - 1]) >> j) & 1]
    popcount = np.array([bin(x).count("1") for x in range(1 << q)], dtype=np.int64)
    rows = q ** (n - 1)
    total = 0
    for start in range(0, rows, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, rows), dtype=np.int64)
        colors = np.empty((idx.size, n - 1), dtype=np.int64)
        t = idx
        for i in range(n - 1):
            colors[:, i] = t % q
            t = t // q
        ok = np.ones(idx.size, dtype=bool)
        for a, b in prefix_edges:
            ok &= colors[:, a] != colors[:, b]
        nb_mask = np.zeros(idx.size, dtype=np.int64)
        for a in last_nbrs:
            nb_mask |= np.left_shift(np.int64(1), colors[:, a])
        allowed = q - popcount[nb_mask]
        total += int((ok * allowed).sum())
    return total


def count_acyclic_orientations(n: int, edges) -> int:
    """Acyclic orientations of (n, edges), counted by trying all 2^m orientations."""
    m = len(edges)
    if m > MAX_ORIENTATION_EDGES:
        raise ValueError(f"exhaustive orientation count capped at {MAX_ORIENTATION_EDGES} edges")
    if m == 0:
        return 1
    us = [int(e[0]) for e in edges]
    vs = [int(e[1]) for e in edges]
    full = (1 << n) - 1
    total = 0
    for start in range(0, 1 << m, _CHUNK):
        bits = np.arange(start, min(start + _CHUNK, 1 << m), dtype=np.int64)
        k = bits.size
        out = np.zeros((k, n), dtype=np.int64)
        for i in range(m):
            d = (bits >> i) & 1
            out[:, us[i]] |= np.where(d == 1, np.int64(1) << vs[i], 0)
            out[:, vs[i]] |= np.where(d == 1, 0, np.int64(1) << us[i])
        alive = np.full(k, full, dtype=np.int64)
        for _ in range(n):
            sink_bits = np.zeros(k, dtype=np.int64)
            for v in range(n):
                is_sink = (((alive >> v) & 1) == 1) & ((out[:, v] & alive) == 0)
                sink_bits |= np.left_shift(is_sink.astype(np.int64), v)
            alive &= ~sink_bits
        total += int((alive == 0).sum())
    return total
