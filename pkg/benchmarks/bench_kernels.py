"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py --order 300 --repeat 5
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from theta_forge import kernels


def partition_factors(order):
    return [(e, 1, True) for e in range(1, order + 1)]


def workloads(order):
    ones = np.ones(order + 1, dtype=np.int64)
    alt = np.array([(-1) ** i for i in range(order + 1)], dtype=np.int64)
    pent = np.zeros(order + 1, dtype=np.int64)
    for e in range(1, order + 1, 3):
        pent[e] = 1
    pent[0] = 1
    return {
        "convolve": lambda: kernels.convolve(ones, alt, order),
        "invert": lambda: kernels.invert(pent, order),
        "divide (q;q)_inf": lambda: kernels.apply_factors(
            np.eye(1, order + 1, dtype=np.int64)[0], partition_factors(order)
        ),
        "knapsack distinct odd": lambda: kernels.knapsack(
            list(range(1, order + 1, 2)), [0] * ((order + 1) // 2), [1] * ((order + 1) // 2), order
        ),
    }


def bench(fn, repeat):
    fn()  # warm-up (and JIT compilation)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=300, help="p(n) passes 2^62 near n=395; larger orders time the exact fallback")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = ["numpy"]
    try:
        kernels.set_backend("numba")
        backends.insert(0, "numba")
    except Exception:  # numba missing
        pass

    results = {}
    for b in backends:
        kernels.set_backend(b)
        for name, fn in workloads(args.order).items():
            results[(name, b)] = bench(fn, args.repeat)

    print(f"order={args.order} repeat={args.repeat} (best of, milliseconds)")
    print(f"{'kernel':24s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name in workloads(args.order):
        row = f"{name:24s}" + "".join(f"{1000 * results[(name, b)]:12.3f}" for b in backends)
        if len(backends) > 1:
            row += f"{results[(name, 'numpy')] / results[(name, 'numba')]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
