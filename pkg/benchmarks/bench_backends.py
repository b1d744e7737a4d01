"""Compare the compiled elimination kernel against the numpy fallback.

    python benchmarks/bench_backends.py            # default cases
    python benchmarks/bench_backends.py --full     # adds p=23, d=528 (g=5797)
    python benchmarks/bench_backends.py --dense 400 800

Cartier matrices are close to triangular, so dense random matrices of the
same size are timed as well; they show the worst case for elimination.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from ascurve import linalg
from ascurve.cartier import cartier_matrix
from ascurve.curve import Curve
from ascurve.search import random_poly, trial_rng

CARTIER_CASES = [(7, 48), (11, 120), (13, 168), (13, 340), (17, 288)]
FULL_CASES = [(23, 528)]


def _time(fn, repeat: int) -> float:
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return statistics.median(ts)


def _row(label, n, p, mat, repeat, backends):
    times, ranks = {}, set()
    for b in backends:
        ranks.add(linalg.rank(mat, p, b))
        times[b] = _time(lambda: linalg.rank(mat, p, b), repeat)
    assert len(ranks) == 1, f"backends disagree on {label}: {ranks}"
    cells = "  ".join(f"{times[b]:10.4f}" for b in backends)
    speedup = times["python"] / times["compiled"] if len(backends) == 2 else float("nan")
    print(f"{label:<24} {n:>6} {ranks.pop():>6}  {cells}  {speedup:8.1f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--dense", type=int, nargs="*", default=[200, 400, 800])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    backends = linalg.available_backends()
    print(f"default backend: {linalg.BACKEND}; timing {', '.join(backends)} (median of {args.repeat})")
    print(f"{'case':<24} {'n':>6} {'rank':>6}  " + "  ".join(f"{b:>10}" for b in backends) + "   speedup")

    cases = CARTIER_CASES + (FULL_CASES if args.full else [])
    for p, d in cases:
        c = Curve(p, random_poly(p, d, trial_rng(args.seed, d)))
        m = cartier_matrix(c).entries
        _row(f"cartier p={p} d={d}", len(m), p, m, args.repeat, backends)

    rng = np.random.default_rng(args.seed)
    for n in args.dense:
        p = 13
        m = rng.integers(0, p, (n, n))
        _row(f"dense p={p}", n, p, m, args.repeat, backends)


if __name__ == "__main__":
    main()
