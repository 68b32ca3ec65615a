#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the per-space table pipeline (the hot path of verification
campaigns) and a full property-suite run under both backends.  The
backends are imported directly, so this script is independent of the
PRETOPO_KERNELS environment flag it documents.

Usage: python benchmarks/bench_kernels.py [--spaces N] [--size N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from pretopo._kernels import numba_impl, numpy_impl
from pretopo.verify import sample_stream
from pretopo.verify.tables import rows_array


def table_pipeline(impl, rows):
    rev = impl.reverse_rows(rows)
    sym = rows | rev
    tc = impl.transitive_closure(rows)
    tcr = impl.transitive_closure(sym)
    impl.or_table(rows)
    impl.or_table(rev)
    impl.or_table(tc)
    impl.or_table(sym)
    impl.or_table(tcr)
    impl.conn_table(sym)
    impl.conn_table(tc | impl.reverse_rows(tc))
    impl.conn_table(tcr)
    impl.tsub_table(rows, tc)
    impl.pathchar_table(rows, tc)
    impl.r_commute_table(rows)


def bench_tables(impl, spaces, repeats=3):
    rows_list = [rows_array(s) for s in spaces]
    table_pipeline(impl, rows_list[0])  # warm JIT / allocator
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for rows in rows_list:
            table_pipeline(impl, rows)
        best = min(best, time.perf_counter() - start)
    return best


def bench_suite(backend, size, count):
    """Full property suite in a subprocess pinned to one backend."""
    code = (
        "import time, pretopo.verify as v; "
        "v.run_suite(v.SuiteBounds(exhaustive_n=1)); "
        "t0 = time.perf_counter(); "
        f"r = v.run_suite(v.SuiteBounds(exhaustive_n=-1, sample_sizes=({size},), "
        f"sample_count={count}, seed=7)); "
        "print(time.perf_counter() - t0, r.failures_total)"
    )
    env = dict(os.environ, PRETOPO_KERNELS=backend)
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    elapsed, failures = out.stdout.split()
    assert failures == "0"
    return float(elapsed)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--spaces", type=int, default=2000)
    parser.add_argument("--size", type=int, default=8)
    parser.add_argument("--suite-samples", type=int, default=1000)
    args = parser.parse_args()

    spaces = list(sample_stream((args.size,), args.spaces, "1/4", seed=424242))
    results = {}
    for name, impl in (("numba", numba_impl), ("numpy", numpy_impl)):
        elapsed = bench_tables(impl, spaces)
        results[name] = elapsed
        per = elapsed / args.spaces * 1e6
        print(f"tables/{name}:  {elapsed:8.3f}s for {args.spaces} spaces "
              f"(n={args.size}), {per:8.1f} us/space")
    print(f"tables speedup: {results['numpy'] / results['numba']:.1f}x "
          f"(numba over numpy fallback)")

    for backend in ("numba", "numpy"):
        elapsed = bench_suite(backend, args.size, args.suite_samples)
        print(f"suite/{backend}:  {elapsed:8.3f}s for {args.suite_samples} sampled "
              f"spaces x 20 properties")


if __name__ == "__main__":
    main()
