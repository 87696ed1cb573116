"""Compare the pair-scan kernels: compiled extension, numpy fallback, big-int loops.

    python benchmarks/bench_kernels.py [--depths 8,10,12] [--repeat 3]
"""

import argparse
import time

from skcurve import kernels
from skcurve.curve import lattice_samples


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depths", default="8,10,12")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--bigint-max-depth", type=int, default=10,
                    help="skip the big-int loops above this depth")
    args = ap.parse_args()

    print(f"default backend: {kernels.BACKEND}")
    print(f"{'depth':>5} {'pairs':>10} {'kernel':>14} {'backend':>9} {'seconds':>9} {'Mpairs/s':>9}")
    for depth in (int(d) for d in args.depths.split(",")):
        xs, ys, h = lattice_samples(depth)
        ts = range(len(xs))
        pairs = len(xs) * (len(xs) - 1) // 2
        a, b = 1 << depth, 4 << (2 * h)
        results = {}
        for name in kernels.available_backends():
            if name == "bigint" and depth > args.bigint_max_depth:
                continue
            for kernel, call in (
                ("max_pair_ratio", lambda: kernels.max_pair_ratio(xs, ys, ts, backend=name)),
                ("first_excess", lambda: kernels.first_excess(xs, ys, ts, a, b, 0, backend=name)),
            ):
                sec, out = best_of(call, args.repeat)
                results.setdefault(kernel, set()).add(out)
                print(f"{depth:>5} {pairs:>10} {kernel:>14} {name:>9} {sec:>9.4f} {pairs / sec / 1e6:>9.1f}")
        for kernel, outs in results.items():
            assert len(outs) == 1, f"backends disagree on {kernel} at depth {depth}: {outs}"


if __name__ == "__main__":
    main()
