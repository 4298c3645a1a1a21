"""Shared test utilities: independent tiny-scale coloring counts and random graphs."""

from __future__ import annotations

import itertools
import random

from chromapersist.graphs import SimpleGraph, WeightedGraph


def count_colorings_by_enumeration(h: SimpleGraph, q: int) -> int:
    """Proper q-colorings counted by iterating all q^n assignments; keep n small."""
    total = 0
    for assignment in itertools.product(range(q), repeat=h.n):
        if all(assignment[u] != assignment[v] for u, v in h.edges):
            total += 1
    return total


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def theta_graph() -> SimpleGraph:
    # two terminals 0, 1 joined by three length-2 paths through 2, 3, 4
    return SimpleGraph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> SimpleGraph:
    """Random spanning tree plus up to extra_edges distinct chords."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    chords = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(chords)
    edges.update(chords[:extra_edges])
    return SimpleGraph(n, tuple(edges))


def random_graph(rng: random.Random, n: int, m: int) -> SimpleGraph:
    """Uniform m-edge graph, possibly disconnected."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return SimpleGraph(n, tuple(rng.sample(pairs, m)))


def distinct_weights(rng: random.Random, count: int) -> list[float]:
    weights: set[float] = set()
    while len(weights) < count:
        weights.add(round(rng.uniform(0.05, 1.0), 9))
    out = list(weights)
    rng.shuffle(out)
    return out


def random_weighted_graph(rng: random.Random, n: int, extra_edges: int) -> WeightedGraph:
    h = random_connected_graph(rng, n, extra_edges)
    ws = distinct_weights(rng, h.m)
    return WeightedGraph(n, tuple((u, v, w) for (u, v), w in zip(h.edges, ws)))
