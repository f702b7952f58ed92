"""Weighted (a;q)-rook numbers: enumeration sums, closed forms and recursions.

The enumeration sums are the primary definitions; the closed forms are
independent product formulas checked against them.  Out-of-range ``k``
gives zero rather than an error.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from aqrook.boards import FerrersBoard, ShiftedBoard, full_shifted, lah_board, rectangle
from aqrook.errors import InvalidFamilyParams, NotFerrersAfterAppend
from aqrook.exactalg import (
    ONE,
    ZERO,
    LinearArg,
    RatExpr,
    aq_number,
    big_weight,
    limit_a_infinity,
    pochhammer,
    q,
    q_binomial,
    q_factorial,
    q_number,
    qmono,
    ratsum,
    small_weight,
    substitute_a,
)
from aqrook.placements import (
    alpha_stats,
    file,
    matching_stats,
    matchings,
    nonattacking,
    nw_rooks,
    uncancelled_matching,
    uncancelled_standard,
)


def _prod(xs: Iterable[RatExpr]) -> RatExpr:
    out = ONE
    for x in xs:
        if x.is_zero():
            return ZERO
        out = out * x
    return out


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


# -- standard model ------------------------------------------------------


@lru_cache(maxsize=None)
def rook_standard(board: FerrersBoard, k: int) -> RatExpr:
    """``r_k(a,q;B)``: sum over nonattacking placements of the small-weight product."""
    terms = []
    for p in nonattacking(board, k):
        cells = uncancelled_standard(board, p)
        terms.append(_prod(small_weight(i - j - nw_rooks(p, (i, j))) for i, j in cells))
    return ratsum(terms)


def closed_rect(l: int, m: int, k: int) -> RatExpr:
    """Product formula for ``r_k(a,q;[l] x [m])``."""
    if k < 0 or k > min(l, m):
        return ZERO
    return (
        qmono(_binom2(k + 1) - l * m)
        * q_binomial(l, k)
        * q_factorial(m)
        / q_factorial(m - k)
        * pochhammer(qmono(l - m - k, a=1), q(), k)
        * pochhammer(qmono(1 + 2 * l - 2 * m, a=1), q(2), m - k)
        / pochhammer(qmono(1 - 2 * m, a=1), q(2), m)
    )


def recur_standard_check(board: FerrersBoard, m: int) -> bool:
    """Last-column recursion for ``r_k(B ∪ m)``, ``1 <= k <= l + 1``."""
    if m < board.max_height:
        raise NotFerrersAfterAppend(f"height {m} below the last column of {list(board.heights)}")
    bigger = board.with_column(m)
    l = board.n_cols
    shift = 2 * (l - m)
    for k in range(1, l + 2):
        lhs = rook_standard(bigger, k)
        rhs = big_weight(m - k, shift) * rook_standard(board, k) + aq_number(
            LinearArg(0, m - k + 1), shift
        ) * rook_standard(board, k - 1)
        if lhs != rhs:
            return False
    return True


# -- r-restricted Lah numbers --------------------------------------------


def lah_number(n: int, r: int, k: int) -> RatExpr:
    """``L^(r)_{n,k}(a,q) = r_{n-k}(a q^(2(1-r)), q; [n+r-1] x [n-r])``.

    ``n = r - 1`` is allowed for the initial value ``L^(r)_{r-1,r-1} = 1``.
    """
    if r < 1 or n < r - 1:
        raise InvalidFamilyParams(f"lah numbers need 1 <= r <= n + 1, got n={n}, r={r}")
    if k < r - 1 or k > n:
        return ZERO
    if n == r - 1:
        return ONE
    return substitute_a(rook_standard(lah_board(n, r), n - k), 2 * (1 - r))


def closed_lah(n: int, r: int, k: int) -> RatExpr:
    if not 1 <= r <= k <= n:
        return ZERO
    e = _binom2(k) - _binom2(n) - n * (k - 1) + 2 * _binom2(r)
    return (
        qmono(e)
        * q_binomial(n + r - 1, k + r - 1)
        * q_factorial(n - r)
        / q_factorial(k - r)
        * pochhammer(qmono(1 - n + k, a=1), q(), n - k)
        * pochhammer(qmono(1 + 2 * r, a=1), q(2), k - r)
        / pochhammer(qmono(3 - 2 * n, a=1), q(2), n - r)
    )


def recur_lah_check(n: int, r: int) -> bool:
    """``L_{n+1,k} = W_{aq^-2n}(n+k-1) L_{n,k-1} + [n+k]_{aq^-2n} L_{n,k}`` for all k."""
    if not 1 <= r <= n:
        raise InvalidFamilyParams(f"recur_lah_check needs 1 <= r <= n, got n={n}, r={r}")
    shift = -2 * n
    for k in range(r - 1, n + 2):
        lhs = lah_number(n + 1, r, k)
        rhs = big_weight(n + k - 1, shift) * lah_number(n, r, k - 1) + aq_number(
            LinearArg(0, n + k), shift
        ) * lah_number(n, r, k)
        if lhs != rhs:
            return False
    return True


# -- alpha-parameter model -----------------------------------------------


def wt_alpha(placement, cell, alpha: int) -> RatExpr:
    v, r_nw, below = alpha_stats(placement, cell)
    if below:
        return ONE
    i, j = cell
    shift = 2 * (-j + (alpha - 1) * (1 - i + r_nw))
    arg = (alpha - 1) * v + 1
    if cell in placement:
        return aq_number(LinearArg(0, arg), shift)
    return big_weight(arg, shift)


@lru_cache(maxsize=None)
def rook_alpha(board: FerrersBoard, k: int, alpha: int) -> RatExpr:
    """``r_k^(alpha)(a,q;B)``: sum over file placements of the product of cell weights."""
    if alpha < 0:
        raise ValueError("alpha must be a nonnegative integer")
    cells = board.cells
    return ratsum(_prod(wt_alpha(p, c, alpha) for c in cells) for p in file(board, k))


def closed_staircase2(n: int, k: int) -> RatExpr:
    """Product formula for ``r_k^(2)(a,q;St_n)``."""
    if n < 1 or k < 0 or k > n - 1:
        return ZERO
    odd = _prod(q_number(2 * j - 1) for j in range(1, k + 1))
    return (
        qmono(-_binom2(n + k) + k * (k + 2))
        * q_binomial(n + k - 1, 2 * k)
        * odd
        * pochhammer(qmono(1, a=1), q(-2), n - k)
        * pochhammer(qmono(1 - 2 * n, a=1), q(2), k)
        / pochhammer(qmono(1, a=1), q(-4), n)
    )


# -- matching model ------------------------------------------------------


@lru_cache(maxsize=None)
def rook_matching(board: ShiftedBoard, k: int) -> RatExpr:
    """``m_k(a,q;B)`` with ``î = N - i`` for a board inside ``B_N``."""
    N = board.vertices
    terms = []
    for p in matchings(board, k):
        weights = []
        for i, j in uncancelled_matching(board, p):
            r, s = matching_stats(board, p, (i, j))
            weights.append(small_weight((N - i) + (N - j) - 1 - 2 * r - s))
        terms.append(_prod(weights))
    return ratsum(terms)


def closed_matching(n: int, k: int) -> RatExpr:
    """Product formula for ``m_k(a,q;B_{2n})``."""
    if k < 0 or k > n:
        return ZERO
    odd = _prod(q_number(2 * j - 1) for j in range(1, k + 1))
    length = 2 * n - k - 1
    return (
        qmono(k * k - _binom2(2 * n))
        * q_binomial(2 * n, 2 * k)
        * odd
        * pochhammer(qmono(4 * n - 2 * k - 3, a=1), q(2), length)
        / pochhammer(qmono(-1, a=1), q(4), length)
    )


def recur_matching_check(N: int) -> bool:
    """``m_k(B_N) = [N-2k+1]' m_{k-1}(B_{N-1}) + W'(N-2k-1) m_k(B_{N-1})`` at ``a q^(2(N-3))``."""
    if N < 2:
        raise InvalidFamilyParams(f"recur_matching_check needs N >= 2, got {N}")
    big, small = full_shifted(N), full_shifted(N - 1)
    shift = 2 * (N - 3)
    for k in range(0, N // 2 + 1):
        lhs = rook_matching(big, k)
        prev = rook_matching(small, k - 1) if k >= 1 else ZERO
        rhs = aq_number(LinearArg(0, N - 2 * k + 1), shift) * prev + big_weight(
            N - 2 * k - 1, shift
        ) * rook_matching(small, k)
        if lhs != rhs:
            return False
    return True


# -- a -> oo -------------------------------------------------------------


def q_rook_number(board: FerrersBoard, k: int) -> RatExpr:
    """``sum_P q^{|U_B(P)|}``, the q-rook number counted directly."""
    return ratsum(qmono(len(uncancelled_standard(board, p))) for p in nonattacking(board, k))


def q_rook_limit_check(board: FerrersBoard, k: int) -> bool:
    return limit_a_infinity(rook_standard(board, k)) == q_rook_number(board, k)
