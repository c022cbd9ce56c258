"""Compare the compiled and pure-Python kernels on random grid colorings.

    python3 benchmarks/bench_kernels.py [--sizes 16 32 64] [--repeat 3]

Prints one line per (kernel, n) with the best wall time of each backend and
the speedup.  Results of both backends are checked for equality first.
"""
import argparse
import time

from coarseness.coloring import random_coloring
from coarseness.generate import generate_points
from coarseness.kernels import backend_module, compiled_available


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if not compiled_available():
        raise SystemExit("compiled extension not built; run pip install --no-build-isolation -e .")
    py, cy = backend_module("python"), backend_module("cython")
    print(f"{'kernel':<16}{'n':>6}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for n in args.sizes:
        ps = random_coloring(generate_points("grid", n, args.seed), args.seed)
        xs = [p.x for p in ps.points]
        ys = [p.y for p in ps.points]
        w = list(ps.colors)
        calls = {
            "halfplane_scan": lambda m: m.halfplane_scan(xs, ys, w),
            "wedge_scan": lambda m: m.wedge_scan(xs, ys, w),
            "local_search_d1": lambda m: m.local_search_d1(xs, ys, w, 10 * n),
        }
        for name, call in calls.items():
            t_py, r_py = best_time(lambda: call(py), args.repeat)
            t_cy, r_cy = best_time(lambda: call(cy), args.repeat)
            if r_py != r_cy:
                raise SystemExit(f"{name} n={n}: backends disagree")
            print(f"{name:<16}{n:>6}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
