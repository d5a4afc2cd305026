"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--large] [--json]
"""
import argparse
import json
import random
import sys
import timeit

from hivebr import kernels
from hivebr.gthive import HiveTriple, _constraint_program


def insert_workload(seed=0, n_words=2000, length=40, alphabet=8):
    rng = random.Random(seed)
    words = [[rng.randint(1, alphabet) for _ in range(length)] for _ in range(n_words)]
    return lambda backend: [kernels.row_insert(w, backend=backend) for w in words]


def hive_workload(triple, flag=None, count_only=True):
    values, order, ptr, cons, _ = _constraint_program(triple, flag)
    return lambda backend: kernels.fill_hives(values, order, ptr, cons, count_only, backend=backend)


WORKLOADS = {
    "row_insert 2000x40": insert_workload(),
    "count hives m=10 (28938)": hive_workload(
        HiveTriple((10, 8, 6, 4, 2, 1), (10, 8, 6, 4, 2), (16, 13, 11, 8, 6, 4, 2, 1), 10)),
    "count hives m=11 (40636)": hive_workload(
        HiveTriple((12, 9, 7, 5, 3, 2, 1), (10, 8, 6, 4, 2), (18, 15, 12, 9, 6, 5, 3, 1), 11)),
    "enumerate hives m=10 (28938)": hive_workload(
        HiveTriple((10, 8, 6, 4, 2, 1), (10, 8, 6, 4, 2), (16, 13, 11, 8, 6, 4, 2, 1), 10),
        count_only=False),
}

# about 20 s on the pure-Python backend
LARGE = {
    "count hives m=12 (7702892)": hive_workload(
        HiveTriple((14, 11, 8, 6, 4, 2, 1), (12, 10, 8, 6, 4, 2),
                   (20, 17, 14, 11, 9, 6, 4, 3, 2, 1, 1), 12)),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--large", action="store_true", help="include the m=12 workload")
    args = ap.parse_args(argv)
    workloads = {**WORKLOADS, **(LARGE if args.large else {})}
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernels unavailable; timing the pure-Python backend only", file=sys.stderr)
    results = []
    for name, fn in workloads.items():
        outs = {b: fn(b) for b in backends}
        agree = all(_normalise(o) == _normalise(outs["python"]) for o in outs.values())
        row = {"workload": name, "agree": agree}
        for b in backends:
            row[b] = min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat))
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        results.append(row)
    if args.json:
        print(json.dumps(results, indent=2))
        return 0
    print(f"{'workload':28s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}  agree")
    for r in results:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'-':>10s}"
        sp = f"{r['speedup']:7.1f}x" if "speedup" in r else f"{'-':>8s}"
        print(f"{r['workload']:28s} {r['python']:10.4f} {cy} {sp}  {r['agree']}")
    return 0


def _normalise(x):
    if isinstance(x, list):
        return [_normalise(y) for y in x]
    if isinstance(x, tuple):
        return [_normalise(y) for y in x]
    return x


if __name__ == "__main__":
    sys.exit(main())
