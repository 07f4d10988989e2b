"""Compare the compiled and pure-Python convolution kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload is timed with every available backend; results must agree
exactly, and the speedup column is python time / compiled time.
"""
import argparse
import time

from hypercatalan import kernels
from hypercatalan import series as ser
from hypercatalan.geode import geode_series


def _with_backend(name, fn):
    saved = kernels.BACKEND
    kernels.BACKEND = name
    try:
        return fn()
    finally:
        kernels.BACKEND = saved


def workloads(quick):
    s66 = ser.solve_S(5 if quick else 6, 6)
    t = ser.solve_T(5 if quick else 6, 4, 4)
    v = 6 if quick else 11
    return [
        ("S*S, F<=%d D=6 (%d terms)" % (s66.max_faces, len(s66)), lambda: ser.multiply(s66, s66)),
        ("T*T, D=4 k1<=4 (%d terms)" % len(t), lambda: ser.multiply(t, t)),
        ("solve_S F<=5 D=5", lambda: ser.solve_S(5, 5)),
        ("solve_S V-2<=%d (Schroeder)" % v, lambda: ser.solve_S(None, v + 1, max_vertices=v)),
        ("geode_series F<=4 D=6", lambda: geode_series(4, 6)),
    ]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND})")
    header = f"{'workload':38s}" + "".join(f"{b:>12s}" for b in backends) + f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    rows = []
    for name, fn in workloads(args.quick):
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = _with_backend(b, lambda: best_of(fn, args.repeat))
        ref = results["python"]
        if any(r != ref for r in results.values()):
            raise SystemExit(f"backend mismatch on {name}")
        speed = times["python"] / times["cython"] if "cython" in times else 1.0
        rows.append((name, times, speed))
        print(f"{name:38s}" + "".join(f"{times[b]:11.4f}s" for b in backends) + f"{speed:9.2f}x")
    return rows


if __name__ == "__main__":
    main()
