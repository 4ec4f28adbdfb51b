#!/usr/bin/env python3
"""Scaling benchmark for the two indexing primitives.

Prints one row per input size: suffix-index build time (suffix array + LCP +
RMQ table) and failure-function time, plus the process peak RSS so far.

Usage:
    python3 scripts/bench_indexing.py [--sizes 10000,100000,1000000] [--alphabet 4]
"""
import argparse
import resource
import time

import numpy as np

from strkit import Text, build_suffix_index, failure_function


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--alphabet", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    # warm the jitted kernels so compile time is not attributed to a size
    failure_function(Text((1, 2, 1), 2))
    build_suffix_index([Text(np.array([1, 2, 1, 2], dtype=np.int64), 2)])

    print(f"{'n':>10}  {'suffix-index':>12}  {'failure-fn':>10}  {'peak RSS':>9}")
    for size in (int(s) for s in args.sizes.split(",")):
        arr = rng.integers(1, args.alphabet + 1, size=size).astype(np.int64)
        text = Text(arr, args.alphabet)
        t0 = time.perf_counter()
        build_suffix_index([text])
        t_index = time.perf_counter() - t0
        t0 = time.perf_counter()
        failure_function(text)
        t_fail = time.perf_counter() - t0
        peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
        print(f"{size:>10}  {t_index:>10.3f} s  {t_fail:>8.3f} s  {peak_mb:>6.0f} MB")


if __name__ == "__main__":
    main()
