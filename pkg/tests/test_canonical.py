"""Canonical graph keys.

Core claims:
- keys are invariant under relabeling
- keys separate non-isomorphic graphs exactly (all 4- and 5-vertex graphs hit
  the known unlabeled counts; a strongly regular pair needing the branching
  step is separated too)
"""

from __future__ import annotations

import itertools
import random

from chromapersist.canonical import canonical_key, labeled_key
from chromapersist.graphs import SimpleGraph
from helpers import complete_graph, cycle_graph, random_graph


def _permuted(h: SimpleGraph, perm: list[int]) -> SimpleGraph:
    return SimpleGraph.from_edges(h.n, [(perm[u], perm[v]) for u, v in h.edges])


def test_relabeling_invariance():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 8)
        h = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(h) == canonical_key(_permuted(h, perm))


def test_same_degree_sequence_separated():
    two_triangles = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(cycle_graph(6)) != canonical_key(two_triangles)


def test_all_small_graphs_hit_unlabeled_counts():
    # 11 unlabeled graphs on 4 vertices, 34 on 5
    for n, expected in ((4, 11), (5, 34)):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keys = set()
        for r in range(len(pairs) + 1):
            for chosen in itertools.combinations(pairs, r):
                keys.add(canonical_key(SimpleGraph(n, chosen)))
        assert len(keys) == expected


def test_strongly_regular_pair_separated():
    # 4x4 rook graph vs Shrikhande: same parameters, 1-WL-identical
    def vid(x, y):
        return 4 * x + y

    rook = set()
    for x, y in itertools.product(range(4), range(4)):
        for k in range(4):
            if k != y:
                rook.add(tuple(sorted((vid(x, y), vid(x, k)))))
            if k != x:
                rook.add(tuple(sorted((vid(x, y), vid(k, y)))))
    shrikhande = set()
    for x, y in itertools.product(range(4), range(4)):
        for dx, dy in ((1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)):
            w = vid((x + dx) % 4, (y + dy) % 4)
            shrikhande.add(tuple(sorted((vid(x, y), w))))
    g1 = SimpleGraph(16, tuple(rook))
    g2 = SimpleGraph(16, tuple(shrikhande))
    assert g1.m == g2.m == 48
    assert canonical_key(g1) != canonical_key(g2)
    perm = list(range(16))
    random.Random(1).shuffle(perm)
    assert canonical_key(g2) == canonical_key(_permuted(g2, perm))


def test_key_embeds_vertex_count():
    assert canonical_key(SimpleGraph(3)) != canonical_key(SimpleGraph(4))
    assert canonical_key(complete_graph(3)) != canonical_key(complete_graph(4))


def test_labeled_key_is_exact_on_labels():
    a = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    b = SimpleGraph.from_edges(4, [(0, 2), (1, 3)])
    assert labeled_key(a) != labeled_key(b)
    assert labeled_key(a) == labeled_key(SimpleGraph.from_edges(4, [(2, 3), (0, 1)]))
