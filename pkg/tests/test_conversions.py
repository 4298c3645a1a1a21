"""Chromatic / Poincare / Betti conversions.

Core claims:
- forests of k edges convert to (1+t)^k; cycles match the closed form
- Poincare coefficients are nonnegative and sum to the acyclic orientation count
- the chromatic <-> Poincare roundtrip is the identity
- the diagonal E wrapper expands lazily and compares by value
"""

from __future__ import annotations

import random

import pytest

from chromapersist.conversions import (
    BettiVector,
    DiagonalEPolynomial,
    betti_vector,
    chromatic_to_diagonal_e,
    chromatic_to_poincare,
    poincare_to_chromatic,
)
from chromapersist.engines import chi_bruteforce_oracle, chi_closed_form
from chromapersist.errors import ConsistencyError
from chromapersist.kernels import count_acyclic_orientations
from chromapersist.polynomials import FactoredChromatic, IntPolynomial
from helpers import cycle_graph, path_graph, random_graph


def test_forest_poincare_is_binomial():
    rng = random.Random(71)
    for _ in range(30):
        n = rng.randint(1, 8)
        edges = []
        for v in range(1, n):
            if rng.random() < 0.6:
                edges.append((rng.randrange(v), v))
        h = type(path_graph(2))(n, tuple(edges))
        p = chromatic_to_poincare(chi_closed_form(h), n)
        assert p == IntPolynomial((1, 1)) ** len(edges)


def test_cycle_poincare_frozen():
    p5 = chromatic_to_poincare(chi_closed_form(cycle_graph(5)), 5)
    assert p5.coeffs == (1, 5, 10, 10, 4)
    p6 = chromatic_to_poincare(chi_closed_form(cycle_graph(6)), 6)
    assert p6.coeffs == (1, 6, 15, 20, 15, 5)
    # (1+t)^n - t^(n-1)(1+t) form
    for n in range(3, 9):
        pn = chromatic_to_poincare(chi_closed_form(cycle_graph(n)), n)
        binom = IntPolynomial((1, 1))
        assert pn == binom ** n - (binom ** 1).shifted(n - 1)


def test_poincare_at_one_counts_acyclic_orientations():
    rng = random.Random(73)
    for _ in range(40):
        n = rng.randint(1, 7)
        h = random_graph(rng, n, rng.randint(0, min(12, n * (n - 1) // 2)))
        p = chromatic_to_poincare(chi_bruteforce_oracle(h), n)
        assert p(1) == count_acyclic_orientations(h.n, h.edges)


def test_roundtrip_identity():
    rng = random.Random(79)
    for _ in range(40):
        n = rng.randint(1, 7)
        h = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2))
        chi = chi_bruteforce_oracle(h)
        assert poincare_to_chromatic(chromatic_to_poincare(chi, n), n) == chi


def test_conversion_guards():
    with pytest.raises(ValueError):
        chromatic_to_poincare(IntPolynomial((0, 1)), 3)
    with pytest.raises(ConsistencyError):
        chromatic_to_poincare(IntPolynomial((0, 1, 1)), 2)
    with pytest.raises(ValueError):
        poincare_to_chromatic(IntPolynomial((1, 1, 1)), 1)
    with pytest.raises(ConsistencyError):
        betti_vector(IntPolynomial((1, -1)), 2)
    with pytest.raises(ValueError):
        betti_vector(IntPolynomial((1, 1, 1)), 1)


def test_betti_vector_pads_and_reads_edges():
    rng = random.Random(83)
    for _ in range(20):
        n = rng.randint(2, 7)
        h = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2))
        b = betti_vector(chromatic_to_poincare(chi_bruteforce_oracle(h), n), n)
        assert len(b.values) == n + 1
        assert b.values[0] == 1
        assert b.values[1] == h.m
    assert betti_vector(IntPolynomial((1, 2, 1)), 4) == BettiVector((1, 2, 1, 0, 0))


def test_diagonal_e_lazy_expansion():
    e = DiagonalEPolynomial.from_factored(FactoredChromatic(0, 0, (5,)))
    assert not e.is_expanded
    assert e.degree == 5
    assert e(3) == 30
    assert not e.is_expanded
    dense = chromatic_to_diagonal_e(chi_closed_form(cycle_graph(5)))
    assert e == dense
    assert e.is_expanded
    assert e.poly.coeffs == (0, 4, -10, 10, -5, 1)
    with pytest.raises(ValueError):
        DiagonalEPolynomial()
