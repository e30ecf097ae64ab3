#!/usr/bin/env python3
"""Benchmark: compiled counting kernel vs the pure-Python fallback.

Counts box returns for representative parameters of both branches over a
range of lattice radii and reports wall times and the speedup.  Counts must
match exactly; a mismatch aborts the run.

Usage: python benchmarks/bench_boxcount.py [--max-radius N]
"""

import argparse
import time
from fractions import Fraction

from nilact.homspace import branch1_param, branch2_param
from nilact.oracle import compiled_kernel_available, count_box_returns


def time_count(p, r, n, force_python):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        count = count_box_returns(p, r, n, force_python=force_python)
        best = min(best, time.perf_counter() - t0)
    return count, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-radius", type=int, default=24)
    args = parser.parse_args()

    cases = [
        (
            "branch2 k=2 rotation",
            branch2_param(2, [[0, -1], [1, 0]], [[1, 0], [0, 1]]),
        ),
        (
            "branch2 k=3 mixed",
            branch2_param(
                3,
                [[Fraction(1, 2), 0, -1], [1, 0, 0], [0, Fraction(1, 3), 0]],
                [[1, 0, 0], [0, 1, Fraction(1, 2)], [0, 0, 1]],
            ),
        ),
        (
            "branch1 k=3 shear",
            branch1_param(
                3,
                [1, Fraction(1, 2), 0],
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [1, Fraction(-1, 2), 2],
            ),
        ),
    ]

    if not compiled_kernel_available():
        print("compiled kernel NOT available; benchmarking python mode only")

    radii = [n for n in (8, 16, args.max_radius) if n > 0]
    print(f"{'case':26s} {'N':>4s} {'count':>8s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, p in cases:
        for n in radii:
            count_py, t_py = time_count(p, 1, n, force_python=True)
            if compiled_kernel_available():
                count_c, t_c = time_count(p, 1, n, force_python=False)
                if count_c != count_py:
                    raise SystemExit(
                        f"kernel mismatch on {name} N={n}: {count_c} != {count_py}"
                    )
                print(
                    f"{name:26s} {n:4d} {count_py:8d} {t_py:9.4f}s {t_c:9.4f}s "
                    f"{t_py / t_c:7.1f}x"
                )
            else:
                print(f"{name:26s} {n:4d} {count_py:8d} {t_py:9.4f}s {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
