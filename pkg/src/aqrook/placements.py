"""Rook placements for the three models and the cell statistics their weights use."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, List, Sequence, Set, Tuple

from aqrook.boards import Cell, FerrersBoard, ShiftedBoard


class Model(str, Enum):
    NONATTACKING = "nonattacking"
    FILE = "file"
    MATCHING = "matching"


@dataclass(frozen=True)
class Placement:
    cells: Tuple[Cell, ...]
    model: Model

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def __iter__(self):
        return iter(self.cells)


def _independent(cells: Sequence[Cell], k: int, clash: Callable[[Cell, Cell], bool]) -> Iterator[Tuple[Cell, ...]]:
    """k-subsets of ``cells`` (in lexicographic order) with no clashing pair."""
    chosen: List[Cell] = []

    def walk(start: int) -> Iterator[Tuple[Cell, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for idx in range(start, len(cells) - (k - len(chosen)) + 1):
            c = cells[idx]
            if any(clash(c, d) for d in chosen):
                continue
            chosen.append(c)
            yield from walk(idx + 1)
            chosen.pop()

    if k < 0:
        return iter(())
    return walk(0)


def nonattacking(board: FerrersBoard, k: int) -> List[Placement]:
    cells = sorted(board.cells)
    clash = lambda c, d: c[0] == d[0] or c[1] == d[1]
    return [Placement(p, Model.NONATTACKING) for p in _independent(cells, k, clash)]


def file(board: FerrersBoard, k: int) -> List[Placement]:
    cells = sorted(board.cells)
    return [Placement(p, Model.FILE) for p in _independent(cells, k, lambda c, d: c[0] == d[0])]


def matchings(board: ShiftedBoard, k: int) -> List[Placement]:
    cells = sorted(board.cells)
    clash = lambda c, d: bool({c[0], c[1]} & {d[0], d[1]})
    return [Placement(p, Model.MATCHING) for p in _independent(cells, k, clash)]


# -- standard and alpha models ------------------------------------------


def uncancelled_standard(board: FerrersBoard, placement: Placement) -> Set[Cell]:
    """Cells not holding a rook and not right of / below a rook in its row / column."""
    rooks = placement.cells
    out = set()
    for i, j in board.cells:
        if (i, j) in rooks:
            continue
        if any(r == j and c < i for c, r in rooks):
            continue
        if any(c == i and r > j for c, r in rooks):
            continue
        out.add((i, j))
    return out


def nw_rooks(placement: Placement, cell: Cell) -> int:
    """Rooks strictly left of and strictly above ``cell``."""
    i, j = cell
    return sum(1 for c, r in placement.cells if c < i and r > j)


def alpha_stats(placement: Placement, cell: Cell) -> Tuple[int, int, bool]:
    """``(v, r_nw, below_rook)`` for a cell on a Ferrers board.

    ``v`` counts rooks strictly left in the same row, ``r_nw`` rooks strictly
    north-west, and ``below_rook`` says a rook sits higher in the same column.
    """
    i, j = cell
    v = r_nw = 0
    below = False
    for c, r in placement.cells:
        if r == j and c < i:
            v += 1
        elif c < i and r > j:
            r_nw += 1
        elif c == i and r > j:
            below = True
    return v, r_nw, below


# -- matching model -----------------------------------------------------


def cancels(rook: Cell, cell: Cell) -> bool:
    """A rook on ``(i, j)`` cancels ``(i, s)`` for ``i < s < j`` and ``(t, j)``, ``(t, i)`` for ``t < i``."""
    ri, rj = rook
    ci, cj = cell
    if ci == ri and ri < cj < rj:
        return True
    return ci < ri and (cj == rj or cj == ri)


def uncancelled_matching(board: ShiftedBoard, placement: Placement) -> Set[Cell]:
    rooks = placement.cells
    return {
        c for c in board.cells
        if c not in rooks and not any(cancels(rook, c) for rook in rooks)
    }


def matching_stats(board: ShiftedBoard, placement: Placement, cell: Cell) -> Tuple[int, int]:
    """``(r, s)``: south-east rooks with both / exactly one cancelled column right of ``cell``."""
    i, j = cell
    r = s = 0
    for ri, rj in placement.cells:
        if ri <= i:
            continue
        if ri > j:
            r += 1
        elif rj > j:
            s += 1
    return r, s
