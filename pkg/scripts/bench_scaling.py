"""Time the uniqueness decision across instance sizes and fit a growth rate.

Generation and recognition are timed separately per size (best of --repeats
runs each), then a least-squares line through the log-log points estimates
the effective exponent of the recognition path.
"""

import argparse
import math
import sys
import time

from cycledec import gen_class_G, is_cycle_number_unique


def best_of(repeats, fn):
    best = math.inf
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def fitted_slope(points):
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(t) for _, t in points]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    den = sum((x - xbar) ** 2 for x in xs)
    return sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / den


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,2000,4000,8000,16000")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--density", type=int, default=3,
                        help="parallel pairs per construction leaf")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--csv-out", default=None, metavar="FILE")
    args = parser.parse_args(argv)

    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        print(f"error: bad --sizes {args.sizes!r}", file=sys.stderr)
        return 2
    if not sizes or min(sizes) < 2 or args.repeats < 1:
        print("error: need sizes >= 2 and repeats >= 1", file=sys.stderr)
        return 2

    rows = []
    for n in sizes:
        t_gen, built = best_of(args.repeats, lambda n=n: gen_class_G(n, args.seed, max_leaf=args.density))
        g, _ = built
        t_rec, verdict = best_of(args.repeats, lambda g=g: is_cycle_number_unique(g))
        rows.append((n, g.m, t_gen, t_rec))
        print(f"n={n} m={g.m} gen={t_gen:.4f}s recognize={t_rec:.4f}s "
              f"verdict={'unique' if verdict else 'nonunique'}")

    if len(rows) >= 2:
        slope = fitted_slope([(n, t) for n, _, _, t in rows])
        print(f"slope={slope:.3f}")

    if args.csv_out:
        with open(args.csv_out, "w") as fh:
            fh.write("n,m,gen_seconds,recognize_seconds\n")
            for n, m, t_gen, t_rec in rows:
                fh.write(f"{n},{m},{t_gen:.6f},{t_rec:.6f}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
