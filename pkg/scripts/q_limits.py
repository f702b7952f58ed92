#!/usr/bin/env python3
"""Print the a -> oo limit of each rook number beside the direct q-rook count."""

import argparse

from aqrook.boards import enumerate_ferrers
from aqrook.exactalg import limit_a_infinity
from aqrook.rookmodels import q_rook_number, rook_standard


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cols", type=int, default=3)
    parser.add_argument("--height", type=int, default=2)
    args = parser.parse_args()
    for board in enumerate_ferrers(args.cols, args.height):
        for k in range(board.n_cols + 1):
            lim = limit_a_infinity(rook_standard(board, k))
            direct = q_rook_number(board, k)
            flag = "ok" if lim == direct else "MISMATCH"
            print(f"B({board.spec()}) k={k}: {lim}  [{flag}]")


if __name__ == "__main__":
    main()
