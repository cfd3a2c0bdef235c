"""Time the exhaustive labeled scan on each available kernel.

The pure kernel walks the same masks as the compiled one, so the
ratio is a direct measure of what the extension buys.  Above n = 6
the pure kernel takes minutes; pass --skip-pure there unless you
want the full comparison.
"""

import argparse
import time

from wtgraph import exhaustive


def time_backend(n, backend, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = exhaustive.scan_all(n, backend=backend)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, help="vertex count, 1..7")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-pure", action="store_true")
    args = ap.parse_args()

    print(f"scan order {args.n} ({1 << (args.n * (args.n - 1) // 2)} labeled graphs)")
    timings = {}
    backends = [] if args.skip_pure else ["pure"]
    if exhaustive.BACKEND == "compiled":
        backends.append("compiled")
    else:
        print("compiled kernel not built; timing the pure kernel only")
    for backend in backends:
        best, result = time_backend(args.n, backend, args.repeat)
        timings[backend] = best
        print(
            f"  {backend:9s} {best:9.3f}s  "
            f"wt={result.wt_count}  consistent={result.consistent}"
        )
    if "pure" in timings and "compiled" in timings:
        print(f"  speedup   {timings['pure'] / timings['compiled']:9.1f}x")


if __name__ == "__main__":
    main()
