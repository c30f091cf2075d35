"""Time the compiled and numpy enumeration kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from lmds import codecore as cc
from lmds import kernels
from lmds.ckfamily import build_ck
from lmds.gf import field_new


def workloads():
    F8, F16 = field_new(2, 3), field_new(2, 4)
    ex = cc.code_from_rows(field_new(3), [[int(c) for c in r] for r in
                           ["100000112", "010002110", "001001200", "000100021", "000011111"]])
    yield "hist [9,5]_3", lambda b: kernels.weight_histogram(ex.field, ex.gen, backend=b)
    c5 = build_ck(F8, 5).code
    yield "hist C_5 q=8", lambda b: kernels.weight_histogram(F8, c5.gen, backend=b)
    c4 = build_ck(F16, 4).code
    yield "hist C_4 q=16", lambda b: kernels.weight_histogram(F16, c4.gen, backend=b)
    c5 = build_ck(F16, 5).code
    yield "hist C_5 q=16", lambda b: kernels.weight_histogram(F16, c5.gen, backend=b)
    c6 = build_ck(F16, 6).code
    yield "hist C_6 q=16", lambda b: kernels.weight_histogram(F16, c6.gen, backend=b)
    d6 = cc.dual(c6)
    yield "deficient C_6 dual q=16", lambda b: kernels.deficient_subsets(F16, d6.gen, 6, backend=b)
    yield "supports C_4 q=16", lambda b: kernels.supports_of_weight(F16, c4.gen, 12, backend=b)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'workload':28s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, job in workloads():
        times = {b: best_of(lambda: job(b), args.repeat) for b in backends}
        row = f"{name:28s}" + "".join(f"{times[b]:12.4f}" for b in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:12.1f}x"
        print(row)


if __name__ == "__main__":
    main()
