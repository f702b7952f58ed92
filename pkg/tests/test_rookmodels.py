import pytest
from hypothesis import given
from hypothesis import strategies as st

from aqrook.boards import (
    enumerate_ferrers,
    ferrers,
    lah_board,
    matching_full,
    rectangle,
    shifted,
    staircase,
)
from aqrook.errors import InvalidFamilyParams, NotFerrersAfterAppend
from aqrook.exactalg import ONE, ZERO, RatExpr, S, LaurentPoly, limit_a_infinity, small_weight
from aqrook.rookmodels import (
    closed_lah,
    closed_matching,
    closed_rect,
    closed_staircase2,
    lah_number,
    q_rook_limit_check,
    q_rook_number,
    recur_lah_check,
    recur_matching_check,
    recur_standard_check,
    rook_alpha,
    rook_matching,
    rook_standard,
)

Q = S**2
A = LaurentPoly.monomial(e_b=2)
W0 = RatExpr(1 - A * Q, Q * (1 - A * Q ** -1))
small_boards = enumerate_ferrers(3, 3)


def test_standard_examples():
    assert rook_standard(rectangle(1, 1), 1) == ONE
    assert rook_standard(rectangle(1, 1), 0) == W0
    expected = RatExpr((1 + Q) * (1 - A * Q ** -2), Q * (1 - A * Q ** -3))
    assert rook_standard(rectangle(2, 2), 2) == expected
    assert closed_rect(2, 2, 2) == expected
    assert rook_standard(ferrers([]), 0) == ONE
    assert rook_standard(ferrers([]), 1) == ZERO


def test_closed_rect_examples():
    assert closed_rect(1, 1, 1) == ONE
    assert closed_rect(1, 1, 0) == W0
    assert closed_rect(2, 2, 3) == ZERO
    assert closed_rect(2, 2, -1) == ZERO


@pytest.mark.parametrize("l", range(1, 4))
@pytest.mark.parametrize("m", range(1, 4))
def test_rect_oracle(l, m):
    for k in range(min(l, m) + 1):
        assert rook_standard(rectangle(l, m), k) == closed_rect(l, m, k)


def test_recursion_examples():
    assert recur_standard_check(ferrers([]), 1)
    assert recur_standard_check(rectangle(1, 1), 2)
    assert recur_standard_check(staircase(3), 3)
    with pytest.raises(NotFerrersAfterAppend):
        recur_standard_check(staircase(3), 1)


def test_lah_examples():
    assert lah_number(1, 1, 1) == ONE
    assert lah_number(2, 1, -1) == ZERO
    assert lah_number(2, 1, 3) == ZERO
    assert lah_number(1, 2, 1) == ONE  # the artificial initial value
    assert lah_number(2, 2, 1) == ZERO
    assert closed_lah(1, 1, 1) == ONE
    assert closed_lah(2, 1, 1) == lah_number(2, 1, 1)
    assert closed_lah(3, 2, 2) == lah_number(3, 2, 2)
    with pytest.raises(InvalidFamilyParams):
        lah_number(1, 3, 1)


@pytest.mark.parametrize("n, r", [(n, r) for n in range(1, 5) for r in range(1, n + 1)])
def test_lah_oracle(n, r):
    for k in range(r, n + 1):
        assert lah_number(n, r, k) == closed_lah(n, r, k)


@pytest.mark.parametrize("n, r", [(1, 1), (3, 1), (3, 2), (2, 2)])
def test_lah_recursion(n, r):
    assert recur_lah_check(n, r)


def test_alpha_examples():
    assert rook_alpha(staircase(2), 1, 2) == ONE
    expected = RatExpr(1 - A * Q ** -1, Q * (1 - A * Q ** -3))
    assert rook_alpha(staircase(2), 0, 2) == expected
    assert closed_staircase2(2, 0) == expected
    assert closed_staircase2(2, 1) == ONE
    with pytest.raises(ValueError):
        rook_alpha(staircase(2), 0, -1)


@pytest.mark.parametrize("board", small_boards, ids=lambda b: b.spec() or "empty")
def test_alpha_zero_is_standard(board):
    for k in range(board.n_cols + 1):
        assert rook_alpha(board, k, 0) == rook_standard(board, k)


@pytest.mark.parametrize("n", range(1, 5))
def test_staircase_oracle(n):
    for k in range(n + 1):
        assert rook_alpha(staircase(n), k, 2) == closed_staircase2(n, k)


def test_matching_examples():
    assert rook_matching(matching_full(1), 1) == ONE
    assert rook_matching(matching_full(1), 0) == W0
    assert closed_matching(1, 1) == ONE
    assert closed_matching(1, 0) == W0
    assert closed_matching(2, 1) == rook_matching(matching_full(2), 1)


@pytest.mark.parametrize("n", range(1, 4))
def test_matching_oracle(n):
    for k in range(n + 2):
        assert rook_matching(matching_full(n), k) == closed_matching(n, k)


@pytest.mark.parametrize("N", [2, 4, 6])
def test_matching_recursion(N):
    assert recur_matching_check(N)


def test_matching_recursion_needs_vertices():
    with pytest.raises(InvalidFamilyParams):
        recur_matching_check(1)


def test_q_limit_examples():
    assert limit_a_infinity(rook_standard(rectangle(1, 1), 0)) == RatExpr(Q)
    assert q_rook_number(rectangle(1, 1), 0) == RatExpr(Q)
    assert q_rook_limit_check(rectangle(2, 2), 1)
    assert q_rook_limit_check(staircase(3), 2)


@pytest.mark.parametrize("board", small_boards, ids=lambda b: b.spec() or "empty")
def test_q_limit_all_small_boards(board):
    for k in range(board.n_cols + 1):
        assert q_rook_limit_check(board, k)


@given(st.lists(st.integers(0, 3), max_size=3).map(lambda h: ferrers(sorted(h))),
       st.integers(0, 3), st.integers(0, 3))
def test_even_b_exponents(board, k, alpha):
    for value in (rook_standard(board, k), rook_alpha(board, k, alpha)):
        assert all(e % 2 == 0 for e in value.b_exponents())


@given(st.sampled_from([matching_full(2), shifted([3, 1], 2), shifted([5, 4, 2], 3)]), st.integers(0, 3))
def test_matching_even_b_exponents(board, k):
    assert all(e % 2 == 0 for e in rook_matching(board, k).b_exponents())


def test_strict_northwest_reading_is_required():
    # counting south-west rooks instead breaks the rectangle closed form
    from aqrook.placements import nonattacking, uncancelled_standard
    from aqrook.exactalg import ratsum

    def southwest(board, k):
        terms = []
        for p in nonattacking(board, k):
            w = ONE
            for i, j in uncancelled_standard(board, p):
                sw = sum(1 for c, r in p.cells if c < i and r < j)
                w = w * small_weight(i - j - sw)
            terms.append(w)
        return ratsum(terms)

    assert any(southwest(rectangle(3, 3), k) != closed_rect(3, 3, k) for k in range(4))
