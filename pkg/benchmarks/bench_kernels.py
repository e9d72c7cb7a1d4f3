"""Compare the compiled kernels with the pure-Python fallback on fixture-sized inputs.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import statistics
import time

from toricbordism import _kernels_py as py
from toricbordism.geometry.cone import cone_over
from toricbordism.library import load
from toricbordism.realization import realize

try:
    from toricbordism import _ckernels as cc
except ImportError:  # extension not built
    cc = None


def workloads():
    flop = realize(load("flop").mdp, (1, 1)).Q
    cube = load("cube").polytope

    # lattice points of 6Q for the 4-dimensional flop slab
    R = flop.dilate(6)
    A, b = R.integer_rows()
    lo = [int(min(p[j] for p in R.vertices)) for j in range(R.rank)]
    hi = [int(max(p[j] for p in R.vertices)) for j in range(R.rank)]
    yield "box_points (6 x flop slab)", "box_points", (A, b, lo, hi)

    # IDP check of 3 x cube against cube + 2 x cube
    t = py.box_points(*cube.dilate(3).integer_rows(), [0] * 3, [3] * 3)
    base = py.box_points(*cube.integer_rows(), [0] * 3, [1] * 3)
    A2, b2 = cube.dilate(2).integer_rows(with_equations=False)
    yield "minkowski_cover (3 x cube)", "minkowski_cover", (t, base, A2, b2)

    # Hilbert basis reduction for the cone over 2 x flop slab
    C = cone_over(flop.dilate(2))
    H = [list(h) for h in C.halfspaces]
    cands = [x for x in py.box_points(H, [0] * len(H), [0, 0, 0, 0, 1], [8, 8, 8, 2, 3]) if any(x)]
    cands.sort(key=lambda x: (x[-1], x))
    yield f"cone_reduce ({len(cands)} candidates)", "cone_reduce", (cands, H)


def timed(fn, args, repeat):
    out, times = None, []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t)
    return out, statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':40s} {'python [s]':>11s} {'compiled [s]':>13s} {'speedup':>8s}")
    for label, name, wargs in workloads():
        ref, tp = timed(getattr(py, name), wargs, args.repeat)
        if cc is None:
            print(f"{label:40s} {tp:11.4f} {'n/a':>13s} {'n/a':>8s}")
            continue
        got, tc = timed(getattr(cc, name), wargs, args.repeat)
        assert got == ref, f"{name}: backends disagree"
        print(f"{label:40s} {tp:11.4f} {tc:13.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
