"""Ferrers and shifted Ferrers boards, the named families, and exhaustive generators.

Cells are plain ``(i, j)`` tuples.  On a Ferrers board ``(i, j)`` is column
``i`` and row ``j`` counted from the bottom.  On a shifted board it is row
``i`` and column ``j`` with ``i < j``, i.e. the edge ``{i, j}`` of the
complete graph on the board's vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, List, Sequence, Tuple, Union

from aqrook.errors import (
    BoardError,
    InvalidFamilyParams,
    InvalidShiftedBoard,
    NegativeHeight,
    NotFerrersAfterAppend,
    NotNondecreasing,
)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class FerrersBoard:
    heights: Tuple[int, ...]

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", heights)
        if any(h < 0 for h in heights):
            raise NegativeHeight(f"negative column height in {list(heights)}")
        if any(x > y for x, y in zip(heights, heights[1:])):
            raise NotNondecreasing(f"column heights must be nondecreasing: {list(heights)}")

    @property
    def n_cols(self) -> int:
        return len(self.heights)

    @property
    def max_height(self) -> int:
        return self.heights[-1] if self.heights else 0

    @property
    def cells(self) -> Tuple[Cell, ...]:
        return tuple((i, j) for i, h in enumerate(self.heights, 1) for j in range(1, h + 1))

    def __len__(self) -> int:
        return sum(self.heights)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.n_cols and 1 <= j <= self.heights[i - 1]

    def with_column(self, m: int) -> "FerrersBoard":
        """``B ∪ m``: append a column of height ``m`` on the right."""
        if m < self.max_height:
            raise NotFerrersAfterAppend(
                f"appending height {m} to {list(self.heights)} breaks monotonicity"
            )
        return FerrersBoard(self.heights + (m,))

    def spec(self) -> str:
        return ",".join(map(str, self.heights))


@dataclass(frozen=True)
class ShiftedBoard:
    """``B(a_1, ..., a_{N-1}) ⊆ B_N`` on ``N = vertices`` vertices.

    Boards from the matching model have ``N = 2n``; odd ``N`` only appears
    through :func:`full_shifted` in the matching-number recursion.
    """

    arms: Tuple[int, ...]
    vertices: int

    def __post_init__(self):
        N = int(self.vertices)
        if N < 1:
            raise InvalidShiftedBoard("a shifted board needs at least one vertex")
        arms = tuple(int(a) for a in self.arms)
        if len(arms) > N - 1:
            raise InvalidShiftedBoard(f"{len(arms)} arms exceed the {N - 1} rows of B_{N}")
        arms = arms + (0,) * (N - 1 - len(arms))
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "vertices", N)
        if any(a < 0 for a in arms):
            raise InvalidShiftedBoard(f"negative arm in {list(arms)}")
        for i, a in enumerate(arms, 1):
            if a > N - i:
                raise InvalidShiftedBoard(f"arm a_{i}={a} leaves B_{N}")
        nonzero = [a for a in arms if a]
        if any(x <= y for x, y in zip(nonzero, nonzero[1:])) or nonzero != list(arms[: len(nonzero)]):
            raise InvalidShiftedBoard(
                f"arms must be weakly decreasing with strictly decreasing nonzero part: {list(arms)}"
            )

    @property
    def n(self) -> int:
        return self.vertices // 2

    @property
    def cells(self) -> Tuple[Cell, ...]:
        return tuple((i, i + j) for i, a in enumerate(self.arms, 1) for j in range(1, a + 1))

    def __len__(self) -> int:
        return sum(self.arms)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.arms) and i < j <= i + self.arms[i - 1]

    def arm(self, i: int) -> int:
        return self.arms[i - 1] if 1 <= i <= len(self.arms) else 0

    def spec(self) -> str:
        return f"shifted:{self.n}:" + ",".join(map(str, self.arms))


def ferrers(heights: Sequence[int]) -> FerrersBoard:
    return FerrersBoard(tuple(heights))


def rectangle(l: int, m: int) -> FerrersBoard:
    """``[l] x [m]``: ``l`` columns of height ``m``."""
    if l < 0 or m < 0:
        raise InvalidFamilyParams(f"rectangle needs l, m >= 0, got {l}, {m}")
    return FerrersBoard((m,) * l)


def staircase(n: int) -> FerrersBoard:
    """``St_n = B(0, 1, ..., n-1)``."""
    if n < 0:
        raise InvalidFamilyParams(f"staircase needs n >= 0, got {n}")
    return FerrersBoard(tuple(range(n)))


def lah_board(n: int, r: int) -> FerrersBoard:
    """``L_n^(r) = [n+r-1] x [n-r]``."""
    if not 1 <= r <= n:
        raise InvalidFamilyParams(f"lah board needs 1 <= r <= n, got n={n}, r={r}")
    return rectangle(n + r - 1, n - r)


def shifted(arms: Sequence[int], n: int) -> ShiftedBoard:
    if n < 1:
        raise InvalidFamilyParams(f"shifted board needs n >= 1, got {n}")
    return ShiftedBoard(tuple(arms), 2 * n)


def full_shifted(N: int) -> ShiftedBoard:
    """``B_N = B(N-1, N-2, ..., 1)`` for any vertex count ``N >= 1``."""
    if N < 1:
        raise InvalidFamilyParams(f"B_N needs N >= 1, got {N}")
    return ShiftedBoard(tuple(range(N - 1, 0, -1)), N)


def matching_full(n: int) -> ShiftedBoard:
    if n < 1:
        raise InvalidFamilyParams(f"matching_full needs n >= 1, got {n}")
    return full_shifted(2 * n)


def enumerate_ferrers(max_cols: int, max_height: int) -> List[FerrersBoard]:
    """All Ferrers boards with at most ``max_cols`` columns of height ``<= max_height``.

    Ordered by number of columns, then lexicographically.
    """
    if max_cols < 0 or max_height < 0:
        raise ValueError("bounds must be nonnegative")
    return [
        FerrersBoard(h)
        for length in range(max_cols + 1)
        for h in combinations_with_replacement(range(max_height + 1), length)
    ]


def _shifted_arms(N: int) -> Iterator[Tuple[int, ...]]:
    rows = N - 1
    # the nonzero part is a strictly decreasing sequence v_1 > ... > v_t, v_i <= N - i
    for t in range(rows + 1):
        for combo in combinations(range(rows, 0, -1), t):
            if all(v <= N - i for i, v in enumerate(combo, 1)):
                yield combo + (0,) * (rows - t)


def enumerate_shifted(n_max: int) -> List[ShiftedBoard]:
    """Every shifted Ferrers board inside ``B_{2n}`` for ``1 <= n <= n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        arms = sorted(_shifted_arms(2 * n))
        out.extend(ShiftedBoard(a, 2 * n) for a in arms)
    return out


_FAMILY = re.compile(r"^(rect|stair|lah|matchfull|shifted):(.*)$")


def _ints(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise BoardError(f"expected comma-separated integers, got {text!r}") from exc


def parse_board(text: str) -> FerrersBoard:
    """``"0,1,2"`` -> ``B(0,1,2)``; the empty string is the empty board."""
    return ferrers(_ints(text))


def parse_family(text: str) -> Union[FerrersBoard, ShiftedBoard]:
    """``rect:l,m | stair:n | lah:n,r | matchfull:n | shifted:n:a1,...``."""
    match = _FAMILY.match(text.strip())
    if not match:
        raise BoardError(f"unknown board family {text!r}")
    kind, rest = match.groups()
    if kind == "shifted":
        head, _, arms = rest.partition(":")
        n = _ints(head)
        if len(n) != 1:
            raise BoardError(f"shifted family needs 'shifted:n:a1,...', got {text!r}")
        return shifted(_ints(arms), n[0])
    args = _ints(rest)
    arity = {"rect": 2, "stair": 1, "lah": 2, "matchfull": 1}[kind]
    if len(args) != arity:
        raise BoardError(f"{kind} takes {arity} integer(s), got {text!r}")
    builder = {"rect": rectangle, "stair": staircase, "lah": lah_board, "matchfull": matching_full}
    return builder[kind](*args)
