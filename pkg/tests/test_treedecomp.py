"""Min-fill tree decompositions.

Core claims:
- outputs are valid decompositions (all three invariants) on random graphs
- widths on trees, cycles, and complete graphs match the known values
- the violation checker actually detects broken decompositions
"""

from __future__ import annotations

import random

from chromapersist.graphs import SimpleGraph
from chromapersist.treedecomp import (
    TreeDecomposition,
    decomposition_violations,
    min_fill_decomposition,
)
from helpers import complete_graph, cycle_graph, path_graph, random_connected_graph, random_graph


def test_tree_width_one():
    rng = random.Random(11)
    for n in range(2, 9):
        td = min_fill_decomposition(random_connected_graph(rng, n, 0))
        assert td.width == 1
    assert min_fill_decomposition(path_graph(6)).width == 1


def test_cycle_width_two():
    for n in range(3, 10):
        assert min_fill_decomposition(cycle_graph(n)).width == 2


def test_complete_width():
    assert min_fill_decomposition(complete_graph(4)).width == 3
    assert min_fill_decomposition(complete_graph(5)).width == 4


def test_degenerate_graphs():
    td = min_fill_decomposition(SimpleGraph(4))
    assert td.width == 0
    assert decomposition_violations(SimpleGraph(4), td) == []
    empty = min_fill_decomposition(SimpleGraph(0))
    assert empty.bags == ()
    assert empty.width == -1
    single = min_fill_decomposition(SimpleGraph(1))
    assert single.bags == (frozenset({0}),)


def test_random_graphs_yield_valid_decompositions():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randint(1, 9)
        m = rng.randint(0, n * (n - 1) // 2)
        h = random_graph(rng, n, m)
        td = min_fill_decomposition(h)
        assert decomposition_violations(h, td) == []
        assert td.width >= (0 if h.m == 0 else 1)


def test_violation_checker_catches_uncovered_edge():
    h = cycle_graph(3)
    td = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2})), ((0, 1),))
    problems = decomposition_violations(h, td)
    assert any("in no bag" in p for p in problems)


def test_violation_checker_catches_disconnected_vertex_bags():
    h = path_graph(3)
    td = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})),
        ((0, 1), (1, 2)),
    )
    problems = decomposition_violations(h, td)
    assert any("not connected" in p for p in problems)


def test_violation_checker_catches_broken_tree():
    h = path_graph(3)
    td = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2})), ())
    problems = decomposition_violations(h, td)
    assert problems
