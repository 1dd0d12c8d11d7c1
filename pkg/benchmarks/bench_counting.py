"""Compare the compiled and pure-Python counting kernels.

    python3 benchmarks/bench_counting.py [--repeat N] [--quick]

Each case is counted with both backends; the counts must agree and the
best-of-N wall time is reported.
"""

import argparse
import time

from smoothehrhart import counting, polytope
from smoothehrhart.reproduce import example14


def cases(quick):
    out = [
        ("B_2, t=3", polytope.b_polytope(2), 3),
        ("B_3, t=2", polytope.b_polytope(3), 2),
        ("B_4, t=3", polytope.b_polytope(4), 3),
        ("H_2, t=2", polytope.h_polytope(2), 2),
        ("9-polytope, t=1", example14(), 1),
    ]
    if not quick:
        out.append(("9-polytope, t=2", example14(), 2))
    return out


def best_time(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--quick", action="store_true", help="skip the slowest case")
    args = parser.parse_args()

    if counting._kernel_c is None:
        parser.error("compiled kernel is not built; reinstall with Cython available")

    print(f"{'case':<18} {'count':>12} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, P, t in cases(args.quick):
        times = {}
        counts = {}
        for backend in ("cython", "python"):
            times[backend], counts[backend] = best_time(
                lambda: counting.count_points(P, t, threads=args.threads, backend=backend).count,
                args.repeat,
            )
        if counts["cython"] != counts["python"]:
            raise SystemExit(f"{name}: backends disagree ({counts})")
        speedup = times["python"] / times["cython"]
        print(f"{name:<18} {counts['cython']:>12} {times['cython']:>10.4f} "
              f"{times['python']:>10.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
