#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Microbenchmarks run both implementations in-process on an identical seeded
workload; the end-to-end row reruns the triple-oracle sweep in a subprocess
with METACOMMUTE_BACKEND forced, so backend selection still happens at
import time.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from metacommute import _kernels_py

try:
    from metacommute import _speedups
except ImportError:
    _speedups = None


def make_workload(seed=0, n=4000):
    rng = random.Random(seed)
    pairs = []
    for _ in range(n):
        parity = rng.randint(0, 1)
        a = tuple(2 * rng.randint(-40, 40) + parity for _ in range(4))
        parity = rng.randint(0, 1)
        b = tuple(2 * rng.randint(-40, 40) + parity for _ in range(4))
        if b == (0, 0, 0, 0):
            b = (2, 0, 0, 0)
        pairs.append((a, b))
    return pairs


def bench(fn, pairs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, b in pairs:
            fn(a, b)
        best = min(best, time.perf_counter() - start)
    return len(pairs) / best  # calls per second


def bench_unary(fn, pairs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, _ in pairs:
            fn(a)
        best = min(best, time.perf_counter() - start)
    return len(pairs) / best


def e2e_sweep_seconds(backend):
    env = dict(os.environ, METACOMMUTE_BACKEND=backend)
    start = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "metacommute", "verify", "oracle",
         "--p-max", "13", "--q-max", "13", "--format", "json"],
        env=env, check=True, capture_output=True,
    )
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernels not built; benchmarking the pure backend only")

    pairs = make_workload()
    rows = [
        ("mul", lambda impl: bench(impl.mul, pairs, args.repeat)),
        ("right_divmod", lambda impl: bench(impl.right_divmod, pairs, args.repeat)),
        ("gcrd", lambda impl: bench(impl.gcrd, pairs, args.repeat)),
        ("canonical_min", lambda impl: bench_unary(impl.canonical_min, pairs, args.repeat)),
    ]

    print(f"{'kernel':<15} {'python ops/s':>14} {'cython ops/s':>14} {'speedup':>9}")
    for name, runner in rows:
        py = runner(_kernels_py)
        if _speedups is not None:
            cy = runner(_speedups)
            print(f"{name:<15} {py:>14,.0f} {cy:>14,.0f} {cy / py:>8.1f}x")
        else:
            print(f"{name:<15} {py:>14,.0f} {'-':>14} {'-':>9}")

    if not args.skip_e2e:
        print()
        py = e2e_sweep_seconds("python")
        line = f"verify oracle sweep (p,q <= 13): python {py:.2f}s"
        if _speedups is not None:
            cy = e2e_sweep_seconds("cython")
            line += f", cython {cy:.2f}s ({py / cy:.1f}x)"
        print(line)


if __name__ == "__main__":
    main()
