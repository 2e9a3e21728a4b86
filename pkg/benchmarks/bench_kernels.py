"""Compiled enumeration kernel against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each case runs one full level (no early stop) on the redundancy part of a
systematic generator matrix and reports nodes per second for both backends.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sandwich_rm import kernels, linalg
from sandwich_rm.codes import sandwich
from sandwich_rm.field import field_for_q

CASES = [
    # (q, n, r, I, w)
    (3, 4, 3, (1,), 4),
    (3, 4, 4, (2,), 4),
    (2, 6, 3, (1,), 5),
    (4, 4, 3, (1,), 3),
]


def _redundancy(q, n, r, I):
    c = sandwich(field_for_q(q, n), r, I)
    S, info, rest = linalg.systematic(c.generator_matrix, c.ctx.fq)
    F = c.ctx.fq
    return c, S[:, rest], F.add.astype(np.uint8), F.mul.astype(np.uint8)


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="lower levels for a smoke run")
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernel not available; rebuild without SANDWICH_RM_PURE")
        return 1
    print(f"{'case':<28} {'w':>2} {'nodes':>12} {'compiled s':>11} {'numpy s':>9} {'speedup':>8}")
    for q, n, r, I, w in CASES:
        if args.quick:
            w = max(1, w - 1)
        c, A, addt, mult = _redundancy(q, n, r, I)
        label = f"{c.label()} [{c.length},{c.dimension}]"
        big = A.shape[1] + w + 1

        def run(mod):
            return mod.enumerate_level(A, q, w, big, 0, 10**15, addt, mult)

        tc, rc = _time(lambda: run(kernels.compiled), args.repeat)
        tf, rf = _time(lambda: run(kernels.fallback), max(1, args.repeat // 3))
        assert rc[0] == rf[0] and rc[3] == rf[3], "backends disagree"
        print(f"{label:<28} {w:>2} {rc[3]:>12,} {tc:>11.4f} {tf:>9.3f} {tf / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
