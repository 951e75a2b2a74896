#!/usr/bin/env python3
"""Benchmark the branch-and-bound kernels: compiled extension vs pure Python.

Both kernels explore the identical tree, so node counts must agree; the
interesting number is the wall-clock ratio. Run:

    python benchmarks/bench_solver.py            # desk-scale instances
    python benchmarks/bench_solver.py --large    # adds K_8 (tens of seconds
                                                 # in pure Python)
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from splitbp import (  # noqa: E402
    HAVE_COMPILED_KERNEL,
    bp_exact,
    complete_graph,
    cycle_graph,
    random_split_graph,
)


def instances(large: bool):
    yield "C_7", cycle_graph(7)
    for n in range(5, 8):
        yield f"K_{n}", complete_graph(n)
    for k, s, p, seed in [(5, 4, 0.5, 1), (5, 4, 0.8, 2), (4, 4, 0.2, 3)]:
        g, _ = random_split_graph(k, s, p, seed)
        yield f"split(k={k},s={s},p={p})", g
    if large:
        yield "K_8", complete_graph(8)


def timed(g, kernel: str):
    t0 = time.perf_counter()
    result = bp_exact(g, kernel=kernel, edge_limit=64)
    return result, time.perf_counter() - t0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--large", action="store_true", help="include K_8")
    args = parser.parse_args()

    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel not built (python setup.py build_ext --inplace);")
        print("timing the pure-Python kernel only\n")

    header = f"{'instance':<24} {'m':>3} {'bp':>3} {'nodes':>12} {'python':>10}"
    if HAVE_COMPILED_KERNEL:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, g in instances(args.large):
        py_result, py_time = timed(g, "python")
        row = (
            f"{name:<24} {g.edge_count:>3} {py_result.optimum:>3} "
            f"{py_result.nodes_explored:>12} {py_time:>9.3f}s"
        )
        if HAVE_COMPILED_KERNEL:
            c_result, c_time = timed(g, "compiled")
            if (
                c_result.optimum != py_result.optimum
                or c_result.nodes_explored != py_result.nodes_explored
                or c_result.witness != py_result.witness
            ):
                print(f"{name}: KERNEL MISMATCH", file=sys.stderr)
                return 1
            row += f" {c_time:>9.3f}s {py_time / max(c_time, 1e-9):>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
