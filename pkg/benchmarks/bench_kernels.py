"""Compare the compiled and pure-Python backtracking kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case counts hom(G, H) with the backtracking strategy on both backends,
checks that the counts agree and reports the best wall time of ``--repeat``
runs.
"""

from __future__ import annotations

import argparse
import time

from homlab import kernels
from homlab.extremal import POOL
from homlab.families import gen_graphs
from homlab.graphs import HGraph, complete, complete_bipartite, cycle, petersen
from homlab.hom import count_hom


def cases():
    k5 = HGraph.from_simple(complete(5))
    yield "C_12 -> Petersen", [cycle(12)], petersen()
    yield "K_{3,5} -> K_5", [complete_bipartite(3, 5)], k5
    yield "K_{4,4} -> Petersen", [complete_bipartite(4, 4)], petersen()
    yield "2-connected n=7 -> K_4", list(gen_graphs("two_connected", 7)), POOL["K4"]
    yield "all graphs n=6 -> Petersen", list(gen_graphs("all", 6)), petersen()


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; only the Python backend can run")
        return 1
    print(f"{'case':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, graphs, h in cases():
        timings = {}
        results = {}
        for backend in ("python", "cython"):
            timings[backend], results[backend] = best_time(
                lambda b=backend: [count_hom(g, h, strategy="backtrack", backend=b) for g in graphs], args.repeat
            )
        if results["python"] != results["cython"]:
            raise SystemExit(f"{label}: backends disagree")
        py, cy = timings["python"], timings["cython"]
        print(f"{label:32} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
