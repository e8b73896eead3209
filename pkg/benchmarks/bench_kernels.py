#!/usr/bin/env python3
"""Timing comparison of the reduction kernels: compiled extension vs the
pure-numpy fallback, with np.sum as a speed reference (np.sum does not fix
its reduction order, so it is not a drop-in alternative).

Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from tfu._kernels import _pure

try:
    from tfu._kernels import _cascade
except ImportError:
    _cascade = None


def best_of(fn, *args, repeats=7):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    rng = np.random.default_rng(0)
    print(f"compiled extension available: {_cascade is not None}\n")

    print("cascade_sum (fixed pairwise tree)")
    header = f"{'n':>10} {'pure (us)':>12} {'compiled (us)':>14} {'np.sum (us)':>12} {'speedup':>8}"
    print(header)
    for exp in (10, 12, 14, 16, 18, 20):
        n = 1 << exp
        data = np.ascontiguousarray(rng.standard_normal(n))
        t_pure = best_of(_pure.cascade_sum, data)
        t_np = best_of(np.sum, data)
        if _cascade is not None:
            t_c = best_of(_cascade.cascade_sum, data)
            assert _cascade.cascade_sum(data) == _pure.cascade_sum(data)
            print(
                f"{n:>10} {t_pure * 1e6:>12.1f} {t_c * 1e6:>14.1f} "
                f"{t_np * 1e6:>12.1f} {t_pure / t_c:>7.1f}x"
            )
        else:
            print(f"{n:>10} {t_pure * 1e6:>12.1f} {'-':>14} {t_np * 1e6:>12.1f} {'-':>8}")

    print("\nprefix_count (sequential threshold crossing, threshold at 50%)")
    print(f"{'n':>10} {'pure (us)':>12} {'compiled (us)':>14} {'speedup':>8}")
    for exp in (10, 14, 16, 18):
        n = 1 << exp
        masses = np.ascontiguousarray(rng.random(n))
        threshold = 0.5 * float(np.sum(masses))
        t_pure = best_of(_pure.prefix_count, masses, threshold)
        if _cascade is not None:
            t_c = best_of(_cascade.prefix_count, masses, threshold)
            assert _cascade.prefix_count(masses, threshold) == _pure.prefix_count(masses, threshold)
            print(f"{n:>10} {t_pure * 1e6:>12.1f} {t_c * 1e6:>14.1f} {t_pure / t_c:>7.1f}x")
        else:
            print(f"{n:>10} {t_pure * 1e6:>12.1f} {'-':>14} {'-':>8}")


if __name__ == "__main__":
    main()
