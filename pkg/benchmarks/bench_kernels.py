"""Benchmark the two kernel backends against each other.

The coloring and orientation counters exist twice: a numba-compiled
backtracking/bitmask version and a pure-numpy vectorized version (the
fallback selected by CHROMAPERSIST_NO_NUMBA at import time). This script
imports both implementations directly, checks they agree on every instance,
and prints a timing table.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from chromapersist.kernels import _numba_impl, _numpy_impl


def cycle_edges(n):
    return tuple((i, (i + 1) % n) for i in range(n))


def complete_edges(n):
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return 10, tuple(outer + spokes + inner)


def random_graph(rng, n, m):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return n, tuple(sorted(rng.sample(pairs, m)))


def timed(fn, repeats):
    best = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best.append(time.perf_counter() - start)
    return statistics.median(best), result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(2024)
    pn, pe = petersen()
    rn, re_ = random_graph(rng, 9, 14)
    coloring_cases = [
        ("C8, q=4", 8, cycle_edges(8), 4),
        ("K6, q=6", 6, complete_edges(6), 6),
        ("Petersen, q=3", pn, pe, 3),
        ("Petersen, q=4", pn, pe, 4),
        ("random n=9 m=14, q=4", rn, re_, 4),
    ]
    on, oe = random_graph(rng, 8, 18)
    orientation_cases = [
        ("C10", 10, cycle_edges(10)),
        ("K5", 5, complete_edges(5)),
        ("Petersen", pn, pe),
        ("random n=8 m=18", on, oe),
    ]

    # first calls pay numba's compile cost; do them before timing
    _numba_impl.count_proper_colorings(3, ((0, 1), (1, 2)), 2)
    _numba_impl.count_acyclic_orientations(3, ((0, 1), (1, 2)))

    header = f"{'instance':<24}{'numba ms':>12}{'numpy ms':>12}{'numpy/numba':>14}"
    print("count_proper_colorings")
    print(header)
    for name, n, edges, q in coloring_cases:
        t_nb, r_nb = timed(lambda: _numba_impl.count_proper_colorings(n, edges, q), args.repeats)
        t_np, r_np = timed(lambda: _numpy_impl.count_proper_colorings(n, edges, q), args.repeats)
        assert r_nb == r_np, (name, r_nb, r_np)
        print(f"{name:<24}{1e3 * t_nb:>12.3f}{1e3 * t_np:>12.3f}{t_np / t_nb:>14.1f}")

    print()
    print("count_acyclic_orientations")
    print(header)
    for name, n, edges in orientation_cases:
        t_nb, r_nb = timed(lambda: _numba_impl.count_acyclic_orientations(n, edges), args.repeats)
        t_np, r_np = timed(lambda: _numpy_impl.count_acyclic_orientations(n, edges), args.repeats)
        assert r_nb == r_np, (name, r_nb, r_np)
        print(f"{name:<24}{1e3 * t_nb:>12.3f}{1e3 * t_np:>12.3f}{t_np / t_nb:>14.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
