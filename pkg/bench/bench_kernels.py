"""Benchmark: compiled kernels vs the pure-Python reference.

Times the per-tuple sweep kernel (power sums + reduced binomial sums) on
both backends over representative workloads and prints the throughput.
Run as ``python bench/bench_kernels.py [--scale N]``.
"""

import argparse
import itertools
import time

from bundle_census import _kernels_py as kpy

try:
    from bundle_census import _kernels_c as kc
except ImportError:
    kc = None


def box_workload(bound):
    """The classic corank-one sweep: rank 2 on CP^3, S_3 per tuple."""
    tuples = [
        (c1, c2, 0)
        for c1, c2 in itertools.product(range(-bound, bound + 1), repeat=2)
    ]
    return "rank-2 box", tuples, 3


def deep_workload(bound, rank=6):
    """Higher-rank tuples: S_7 per tuple, heavier Newton recurrences."""
    values = range(-bound, bound + 1)
    tuples = [
        classes + (0,) * (rank + 1 - len(classes))
        for classes in itertools.product(values, repeat=3)
    ]
    return f"rank-{rank} spine", tuples, rank + 1


def big_workload(count):
    """Coefficients far beyond int64: exercises the bignum path on both sides."""
    base = 10**25
    tuples = [(base + i, -2 * base + 3 * i, base // 7, 0) for i in range(count)]
    return "bignum tuples", tuples, 4


def run(kern, tuples, N, repeats):
    start = time.perf_counter()
    for _ in range(repeats):
        for coeffs in tuples:
            kern.schwarz_terms(coeffs, N)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=40,
                        help="half-width of the rank-2 box (default 40)")
    parser.add_argument("--repeats", type=int, default=1)
    args = parser.parse_args()

    workloads = [
        box_workload(args.scale),
        deep_workload(max(4, args.scale // 5)),
        big_workload(2000),
    ]

    backends = [("python", kpy)]
    if kc is not None:
        backends.append(("c", kc))
    else:
        print("compiled kernels not built; timing the pure-Python backend only\n")

    print(f"{'workload':<16} {'tuples':>9} " +
          " ".join(f"{name + ' (s)':>12}" for name, _ in backends) +
          ("  speedup" if kc is not None else ""))
    for label, tuples, N in workloads:
        times = []
        for _, kern in backends:
            # verify agreement while we are here
            sample = tuples[:: max(1, len(tuples) // 50)]
            assert [kern.schwarz_terms(t, N) for t in sample] == [
                kpy.schwarz_terms(t, N) for t in sample
            ]
            times.append(run(kern, tuples, N, args.repeats))
        row = f"{label:<16} {len(tuples) * args.repeats:>9} " + " ".join(
            f"{t:>12.3f}" for t in times
        )
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>6.1f}x"
        print(row)

    if kc is not None:
        total = len(workloads[0][1]) * args.repeats
        rate = total / run(kc, workloads[0][1], workloads[0][2], args.repeats)
        print(f"\ncompiled rank-2 throughput: {rate:,.0f} tuples/s")


if __name__ == "__main__":
    main()
