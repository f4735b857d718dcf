"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is timed on both backends and the results are checked to be
identical before the timing is reported.
"""
import argparse
import timeit

from qweight import _core, _kernels_py
from qweight.curve import CurveFamily
from qweight.errors import InvalidFamilyError


def grid_oracle(k):
    # the verify workload: enumerate every exponent set on the acceptance grid
    out = []
    for n in range(2, 11):
        for d in range(n + 1, 37):
            try:
                f = CurveFamily(n, d)
            except InvalidFamilyError:
                continue
            for q in range(1, 7):
                b = f.bound(q)
                out.append(k.exponent_sums(n, d, b))
                out.append(k.orders_distinct(n, 1, d, b))
    return out


def large_oracle(k):
    f = CurveFamily(3, 2000)
    return k.exponent_sums(3, 2000, f.bound(6)), k.orders_distinct(3, 2000, 2000, f.bound(6))


def gaps(k):
    return [len(k.gap_list(a, b)) for a, b in [(97, 101), (127, 200), (31, 1000)]]


def dsum(k):
    return [k.dsum_numerator(a % 997, 5 * a % 997, 997) for a in range(200)]


WORKLOADS = [("grid oracle (n<=10, d<=36, q<=6)", grid_oracle),
             ("exponent set (3, 2000, q=6)", large_oracle),
             ("gap enumeration", gaps),
             ("Dedekind-type sum, c=997", dsum)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _core._c is None:
        raise SystemExit("compiled kernels not available; build with `pip install -e . --no-build-isolation`")
    print(f"{'workload':36s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, fn in WORKLOADS:
        assert fn(_kernels_py) == fn(_core._c), name
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(_core._c), number=1, repeat=args.repeat))
        print(f"{name:36s} {t_py * 1e3:12.2f} {t_c * 1e3:12.2f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
