"""Time the brute-force enumeration kernels: compiled extension vs pure Python.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from equivqp import kernels
from equivqp.corpus import rotation_period_ten, symmetric_group
from equivqp.coxeter_a import build_type_a
from equivqp.linalg import IntMatrix

CASES = [
    # (label, fix matrix, forms, q)
    ("rank 2, rotation arrangement, identity, q=400",
     lambda: (IntMatrix.zeros(2, 0), rotation_period_ten().arrangement.coeffs), 400),
    ("rank 3, braid A3, identity, q=60",
     lambda: (IntMatrix.zeros(3, 0), build_type_a(3).arrangement.coeffs), 60),
    ("rank 3, braid A3, transposition, q=60",
     lambda: (symmetric_group(3).representative(1) - IntMatrix.identity(3), build_type_a(3).arrangement.coeffs), 60),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled kernels not available; only the Python timings are shown")
    print(f"{'case':<44} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, build, q in CASES:
        fix, forms = build()
        tp, vp = best_of(lambda: kernels.count_fixed_complement(fix, forms, q, backend="python"), args.repeat)
        if kernels.BACKEND == "compiled":
            tc, vc = best_of(lambda: kernels.count_fixed_complement(fix, forms, q, backend="compiled"), args.repeat)
            if vc != vp:
                raise SystemExit(f"backends disagree on {label}: {vp} vs {vc}")
            print(f"{label:<44} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
        else:
            print(f"{label:<44} {tp:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
