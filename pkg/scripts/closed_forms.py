#!/usr/bin/env python3
"""Enumeration vs closed form for each board family, with timings.

Prints one row per (family, size, k): whether the weighted enumeration and
the product formula agree, the number of placements, and both timings.
"""

import argparse
import time

from aqrook import boards as bd
from aqrook import placements as pl
from aqrook import rookmodels as rm


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def rows(max_n: int):
    for n in range(1, max_n + 1):
        B = bd.rectangle(n, n)
        for k in range(n + 1):
            yield f"rect {n}x{n}", k, len(pl.nonattacking(B, k)), lambda: rm.rook_standard(B, k), lambda: rm.closed_rect(n, n, k)
        St = bd.staircase(n)
        for k in range(n):
            yield f"stair {n} (alpha=2)", k, len(pl.file(St, k)), lambda: rm.rook_alpha(St, k, 2), lambda: rm.closed_staircase2(n, k)
        for r in range(1, n + 1):
            for k in range(r, n + 1):
                yield (f"lah n={n} r={r}", k, len(pl.nonattacking(bd.lah_board(n, r), n - k)),
                       lambda: rm.lah_number(n, r, k), lambda: rm.closed_lah(n, r, k))
        if n <= 3:
            M = bd.matching_full(n)
            for k in range(n + 1):
                yield f"matchfull {n}", k, len(pl.matchings(M, k)), lambda: rm.rook_matching(M, k), lambda: rm.closed_matching(n, k)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()
    print(f"{'family':<22}{'k':>3}{'placements':>12}{'agree':>7}{'enum ms':>10}{'closed ms':>11}")
    for family, k, count, enum, closed in rows(args.max_n):
        a, ta = timed(enum)
        b, tb = timed(closed)
        print(f"{family:<22}{k:>3}{count:>12}{str(a == b):>7}{ta * 1e3:>10.2f}{tb * 1e3:>11.2f}")


if __name__ == "__main__":
    main()
