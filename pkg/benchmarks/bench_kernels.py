#!/usr/bin/env python3
"""Benchmark the numba counting kernels against the pure-numpy fallback.

The counting kernels are the grid-search hot spot: every (eps, eps') value
scans every matrix entry of every sample.  Run:

    python benchmarks/bench_kernels.py [--n 10000] [--repeats 5]

Set QUIVERMAT_NO_NUMBA=1 to verify the package still works on the numpy
path (this script times both regardless of the flag).
"""

import argparse
import time

import numpy as np

from quivermat import _kernels


def time_fn(fn, repeats):
    fn()  # warm-up (JIT compilation for the numba path)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=10_000,
                        help="number of sample matrices")
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--cols", type=int, default=785)
    parser.add_argument("--classes", type=int, default=10)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    mats = rng.standard_normal((args.n, args.k, args.cols)).astype(np.float32)
    std = np.abs(rng.standard_normal((args.classes, args.k, args.cols))
                 ).astype(np.float32)
    mean = rng.standard_normal((args.classes, args.k, args.cols)
                               ).astype(np.float32)
    preds = rng.integers(0, args.classes, size=args.n)
    entries = args.n * args.k * args.cols

    print(f"{args.n} matrices of {args.k}x{args.cols} "
          f"({entries / 1e6:.0f}M entries), best of {args.repeats}")
    print(f"active backend: {_kernels.backend()}")

    rows = []
    for name, kwargs in (("reliable_counts", dict(std=std, eps=0.1)),
                         ("interval_counts", dict(mean=mean, std=std,
                                                  delta=1.0))):
        fn = getattr(_kernels, name)
        t_np = time_fn(lambda: fn(mats, preds=preds, use_numba=False,
                                  **kwargs), args.repeats)
        if _kernels.HAS_NUMBA:
            t_nb = time_fn(lambda: fn(mats, preds=preds, use_numba=True,
                                      **kwargs), args.repeats)
            a = fn(mats, preds=preds, use_numba=True, **kwargs)
            b = fn(mats, preds=preds, use_numba=False, **kwargs)
            assert np.array_equal(a, b), "backends disagree"
            rows.append((name, t_np, t_nb, t_np / t_nb))
        else:
            rows.append((name, t_np, None, None))

    print(f"{'kernel':<18}{'numpy':>10}{'numba':>10}{'speedup':>9}")
    for name, t_np, t_nb, speedup in rows:
        nb = f"{t_nb * 1e3:8.1f}ms" if t_nb is not None else "       --"
        sp = f"{speedup:8.1f}x" if speedup is not None else "       --"
        print(f"{name:<18}{t_np * 1e3:8.1f}ms{nb}{sp}")


if __name__ == "__main__":
    main()
