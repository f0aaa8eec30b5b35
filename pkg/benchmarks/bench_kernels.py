"""
Time the compiled and pure-Python row kernels on full structure-constant
tables, and confirm both produce identical arrays.

    python3 benchmarks/bench_kernels.py --max-kappa 6 --repeat 3
"""
import argparse
import json
import time

import numpy as np

from heckecount import kernel
from heckecount.algebra import structure_constants


def best_of(repeat, fn):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def same_rows(a, b):
    return all(np.array_equal(x, y) for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb))


def main():
    ap = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    ap.add_argument("--min-kappa", type=int, default=3)
    ap.add_argument("--max-kappa", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    names = kernel.available()
    if "compiled" not in names:
        print("compiled kernel unavailable; timing the Python kernel only")
    for kappa in range(args.min_kappa, args.max_kappa + 1):
        row = {"kappa": kappa}
        tables = {}
        for name in names:
            t, tables[name] = best_of(args.repeat, lambda: structure_constants(kappa, kernel=name))
            row[f"{name}_s"] = round(t, 4)
        row["nnz"] = tables[names[0]].nnz()
        if len(tables) == 2:
            row["identical"] = same_rows(tables["compiled"], tables["python"])
            row["speedup"] = round(row["python_s"] / row["compiled_s"], 1)
        print(json.dumps(row) if args.json else "  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
