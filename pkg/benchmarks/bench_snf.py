"""Compare the compiled and pure Smith normal form backends.

Runs both kernels on identical random integer matrices and on the
boundary matrices of a few builtin nerves, checks that the divisor
chains agree, and prints the timings side by side. The compiled kernel
works over int64 and raises OverflowError when a guard trips; those
cases are reported rather than timed.
"""

import argparse
import random
import time

from coxartin import HAVE_COMPILED, build_nerve, d0_complex, parse_system
from coxartin import _snfpure

if HAVE_COMPILED:
    import numpy as np

    from coxartin import _snfcore


def time_pure(mat, repeats):
    out = None
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = _snfpure.smith_normal_form(mat)
        times.append(time.perf_counter() - t0)
    return out, min(times)


def time_compiled(mat, repeats):
    arr = np.array(mat, dtype=np.int64)
    out = None
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        try:
            divisors, rank = _snfcore.snf_int64(arr.copy())
        except OverflowError:
            return None, None
        out = (list(divisors), rank)
        times.append(time.perf_counter() - t0)
    return out, min(times)


def random_matrix(rng, rows, cols, bound):
    return [
        [rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)
    ]


def bench_case(label, mat, repeats):
    pure_out, pure_t = time_pure(mat, repeats)
    if not HAVE_COMPILED:
        print(f"{label:<30} pure {pure_t * 1e3:8.3f} ms   (no compiled kernel)")
        return
    comp_out, comp_t = time_compiled(mat, repeats)
    if comp_out is None:
        print(f"{label:<30} pure {pure_t * 1e3:8.3f} ms   compiled: overflow guard")
        return
    if comp_out != pure_out:
        raise SystemExit(f"{label}: backends disagree: {comp_out} vs {pure_out}")
    speedup = pure_t / comp_t if comp_t else float("inf")
    print(
        f"{label:<30} pure {pure_t * 1e3:8.3f} ms   "
        f"compiled {comp_t * 1e3:8.3f} ms   x{speedup:5.1f}"
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20260815)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="*", default=[8, 16, 24, 32, 48])
    ap.add_argument("--bound", type=int, default=9, help="entry magnitude bound")
    args = ap.parse_args()

    print(f"compiled kernel available: {HAVE_COMPILED}")
    rng = random.Random(args.seed)

    for n in args.sizes:
        bench_case(
            f"random {n}x{n} |a| <= {args.bound}",
            random_matrix(rng, n, n, args.bound),
            args.repeats,
        )

    for name in ("E~8", "B~4", "D~5", "E8"):
        cx = d0_complex(build_nerve(parse_system(name)))
        sizes = [
            (k, len(cx.boundaries[k]), len(cx.boundaries[k][0]))
            for k in range(1, cx.top + 1)
        ]
        k, rows, cols = max(sizes, key=lambda t: t[1] * t[2])
        bench_case(
            f"nerve {name} boundary {k} ({rows}x{cols})",
            cx.boundaries[k],
            args.repeats,
        )


if __name__ == "__main__":
    main()
