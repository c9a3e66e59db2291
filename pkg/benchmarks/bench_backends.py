#!/usr/bin/env python3
"""Time the numba and numpy kernel backends against each other.

Both backends build one packed sign pattern per binary tree and deduplicate,
so the distinct counts must agree; the interesting number is the wall time
per size. The first numba call includes JIT compilation and is warmed up
before timing.

Usage: python benchmarks/bench_backends.py [--min-n 8] [--max-n 14] [--repeat 3]
"""

import argparse
import time

from nonassoc import kernels, tree_core


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-n", type=int, default=8)
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "numba" in backends:
        kernels.distinct_parity_masks(5, backend="numba")  # warm the JIT
    else:
        print("numba not available; timing numpy only")

    header = f"{'n':>3} {'trees':>12} {'distinct':>9}"
    for b in backends:
        header += f" {b + ' (s)':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)

    for n in range(args.min_n, args.max_n + 1):
        counts = {}
        times = {}
        for b in backends:
            times[b] = best_time(lambda: kernels.distinct_parity_masks(n, backend=b), args.repeat)
            counts[b] = int(kernels.distinct_parity_masks(n, backend=b).shape[0])
        assert len(set(counts.values())) == 1, f"backend disagreement at n={n}: {counts}"
        row = f"{n:>3} {tree_core.catalan(n):>12} {counts[backends[0]]:>9}"
        for b in backends:
            row += f" {times[b]:>12.6f}"
        if len(backends) == 2:
            row += f" {times['numpy'] / times['numba']:>8.2f}"
        print(row)


if __name__ == "__main__":
    main()
