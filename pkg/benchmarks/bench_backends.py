"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Times the exhaustive tree and graph scans on both backends, checks that the
outputs agree bit for bit, and prints the speedup.  Run as a script:

    python3 benchmarks/bench_backends.py [--tree-n 8] [--graph-n 6] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from irrlab import backend


def _best_time(func, *args, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def _tables_equal(a, b) -> bool:
    return set(a) == set(b) and all(np.array_equal(a[k], b[k]) for k in a)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--tree-n", type=int, default=8, help="largest tree order to scan")
    parser.add_argument("--graph-n", type=int, default=6, help="largest graph order to scan")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best of)")
    args = parser.parse_args()

    backends = backend.available_backends()
    if len(backends) < 2:
        print("compiled extension not available; nothing to compare")
        return 0
    py, cy = backends["python"], backends["cython"]

    jobs = []
    for n in range(max(2, args.tree_n - 1), args.tree_n + 1):
        jobs.append((f"tree_table({n})", "tree_table", n))
    for n in range(max(1, args.graph_n - 1), args.graph_n + 1):
        jobs.append((f"graph_table({n})", "graph_table", n))

    print(f"{'kernel':<16} {'python':>10} {'cython':>10} {'speedup':>9}  outputs")
    for label, func, n in jobs:
        t_py, r_py = _best_time(getattr(py, func), n, repeat=args.repeat)
        t_cy, r_cy = _best_time(getattr(cy, func), n, repeat=args.repeat)
        same = "bit-equal" if _tables_equal(r_py, r_cy) else "DIFFER"
        print(f"{label:<16} {t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>8.1f}x  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
