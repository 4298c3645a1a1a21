"""Numba-compiled counting kernels (the default backend)."""

from __future__ import annotations

import numpy as np
from numba import njit

from ._common import lower_neighbor_masks, visit_order

BACKEND = "numba"

MAX_ORIENTATION_EDGES = 24


@njit(cache=True)
def _coloring_core(masks: np.ndarray, q: int) -> np.int64:
    n = masks.size
    last = n - 1
    color = np.zeros(n, np.int64)
    forb = np.zeros(n, np.int64)
    total = np.int64(0)
    level = 0
    color[0] = -1
    forb[0] = 0
    while level >= 0:
        if level == last:
            f = forb[level]
            cnt = np.int64(q)
            for c in range(q):
                if (f >> c) & 1:
                    cnt -= 1
            total += cnt
            level -= 1
            continue
        c = color[level] + 1
        f = forb[level]
        while c < q and (f >> c) & 1:
            c += 1
        if c >= q:
            level -= 1
            continue
        color[level] = c
        nxt = level + 1
        m = masks[nxt]
        ff = np.int64(0)
        j = 0
        while m:
            if m & 1:
                ff |= np.int64(1) << color[j]
            m >>= 1
            j += 1
        forb[nxt] = ff
        color[nxt] = -1
        level = nxt
    return total


@njit(cache=True)
def _acyclic_core(us: np.ndarray, vs: np.ndarray, n: int) -> np.int64:
    m = us.size
    total = np.int64(0)
    out = np.zeros(n, np.int64)
    indeg = np.zeros(n, np.int64)
    queue = np.zeros(n, np.int64)
    for mask in range(1 << m):
        for v in range(n):
            out[v] = 0
            indeg[v] = 0
        for i in range(m):
            if (mask >> i) & 1:
                t, h = us[i], vs[i]
            else:
                t, h = vs[i], us[i]
            out[t] |= np.int64(1) << h
            indeg[h] += 1
        qh = 0
        qt = 0
        for v in range(n):
            if indeg[v] == 0:
                queue[qt] = v
                qt += 1
        alive = n
        while qh < qt:
            v = queue[qh]
            qh += 1
            alive -= 1
            o = out[v]
            w = 0
            while o:
                if o & 1:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        queue[qt] = w
                        qt += 1
                o >>= 1
                w += 1
        if alive == 0:
            total += 1
    return total


def count_proper_colorings(n: int, edges, q: int) -> int:
    """Proper q-colorings of the simple graph (n, edges), by exhaustive backtracking."""
    if n < 0 or q < 0:
        raise ValueError("n and q must be nonnegative")
    if n == 0:
        return 1
    if q == 0:
        return 0
    if n == 1:
        return q
    order = visit_order(n, edges)
    masks = lower_neighbor_masks(n, edges, order)
    return int(_coloring_core(masks, q))


def count_acyclic_orientations(n: int, edges) -> int:
    """Acyclic orientations of (n, edges), counted by trying all 2^m orientations."""
    m = len(edges)
    if m > MAX_ORIENTATION_EDGES:
        raise ValueError(f"exhaustive orientation count capped at {MAX_ORIENTATION_EDGES} edges")
    if m == 0:
        return 1
    us = np.array([e[0] for e in edges], dtype=np.int64)
    vs = np.array([e[1] for e in edges], dtype=np.int64)
    return int(_acyclic_core(us, vs, n))
