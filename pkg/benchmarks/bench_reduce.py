"""Compare the compiled and pure-Python column-reduction kernels.

Usage: python3 benchmarks/bench_reduce.py [--repeat N]

Each workload is the top boundary matrix of a Rips complex; both kernels
reduce the same matrix and must return identical pivots.
"""

import argparse
import time

import numpy as np

from ripsnerve.graphs import cycle_graph, sample
from ripsnerve.homology import _compiled_reduce, boundary_matrix
from ripsnerve.metric import random_planar, rips


def workloads():
    circle = sample(cycle_graph(3.0), 0.05).dist
    yield "circle60 r=1.2 d2", rips(circle, 1.2, "open", 2), 2
    yield "circle60 r=0.9 d3", rips(circle, 0.9, "open", 3), 3
    X = random_planar(120, np.random.default_rng(0))
    yield "planar120 r=0.25 d2", rips(X, 0.25, "open", 2), 2
    yield "planar120 r=0.25 d2 p=3", rips(X, 0.25, "open", 2), 2


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _compiled_reduce is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'workload':28} {'shape':>14} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, c, k in workloads():
        p = 3 if name.endswith("p=3") else 2
        M = boundary_matrix(c, k, p)
        tp, lows_p = best_of(lambda: M.lows("python"), args.repeat)
        if _compiled_reduce is None:
            print(f"{name:28} {str(M.shape):>14} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, lows_c = best_of(lambda: M.lows("cython"), args.repeat)
        assert lows_p == lows_c, f"kernels disagree on {name}"
        print(f"{name:28} {str(M.shape):>14} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
