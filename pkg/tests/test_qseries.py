from hypothesis import given
from hypothesis import strategies as st

from aqrook.exactalg import (
    ONE,
    ZERO,
    LinearArg,
    RatExpr,
    S,
    aq_binomial,
    aq_binomial_factorial_form,
    aq_factorial,
    aq_number,
    big_weight,
    pochhammer,
    q,
    q_binomial,
    q_factorial,
    q_number,
    qmono,
    small_weight,
)
from aqrook.exactalg.laurent import LaurentPoly

Q = S**2
A = LaurentPoly.monomial(e_b=2)


def test_qmono_half_powers():
    assert qmono(1.5, a=-0.5) == RatExpr.monomial(3, -1)


def test_pochhammer_examples():
    u = qmono(0, z=1)
    assert pochhammer(u, q(), 0) == ONE
    assert pochhammer(ONE, q(), 2) == ZERO
    assert pochhammer(qmono(1, a=1), q(2), 2) == RatExpr((1 - A * Q) * (1 - A * Q**3))


@given(st.integers(0, 6), st.integers(0, 6), st.integers(-3, 3), st.integers(0, 1))
def test_pochhammer_splits(m, n, k, z):
    u = qmono(k, a=1, z=z)
    assert pochhammer(u, q(), m + n) == pochhammer(u, q(), m) * pochhammer(u * qmono(m), q(), n)


def test_small_weight_examples():
    w0 = RatExpr((1 - A * Q), Q * (1 - A * Q ** -1))
    assert small_weight(0) == w0
    w1 = RatExpr((1 - A * Q**3), Q * (1 - A * Q))
    assert small_weight(1) == w1
    assert small_weight(0, 2) == w1


def test_big_weight_examples():
    assert big_weight(0) == ONE
    assert big_weight(1) == small_weight(1)
    assert big_weight(-1) == RatExpr(Q * (1 - A * Q ** -1), 1 - A * Q)


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_big_weight_multiplicative(k, n):
    assert big_weight(k + n) == big_weight(k) * big_weight(n, 2 * k)


@given(st.integers(1, 6), st.integers(-3, 3))
def test_big_weight_is_product_of_small(k, shift):
    prod = ONE
    for i in range(1, k + 1):
        prod = prod * small_weight(i, shift)
    assert big_weight(k, shift) == prod


def test_aq_number_examples():
    assert aq_number(LinearArg(0, 1)) == ONE
    assert aq_number(LinearArg(0, 2)) == RatExpr((1 + Q) * (1 - A * Q**2), Q * (1 - A * Q))
    Zp = LaurentPoly.monomial(e_z=1)
    expected = RatExpr((1 - Zp) * (1 - A * Zp) * Q, Zp * (1 - Q) * (1 - A * Q))
    assert aq_number(LinearArg(1, 0)) == expected
    assert aq_number(LinearArg(0, 0)) == ZERO


@given(st.integers(0, 5))
def test_aq_number_splitting(y):
    lhs = aq_number(LinearArg(1, y))
    rhs = aq_number(LinearArg(0, y)) + big_weight(y) * aq_number(LinearArg(1, 0), 2 * y)
    assert lhs == rhs


def test_factorial_examples():
    assert aq_factorial(0) == ONE
    assert aq_factorial(1) == ONE
    assert aq_factorial(2) == aq_number(LinearArg(0, 2))


def test_binomial_examples():
    for n in range(5):
        assert aq_binomial(n, 0) == ONE
        assert aq_binomial(n, -1) == ZERO
        assert aq_binomial(n, n + 1) == ZERO
    assert aq_binomial(2, 1) == aq_number(LinearArg(0, 2))
    assert aq_binomial(5, 2) == aq_binomial(5, 3)


@given(st.integers(0, 7), st.data())
def test_binomial_forms_agree(n, data):
    k = data.draw(st.integers(0, n))
    assert aq_binomial(n, k) == aq_binomial_factorial_form(n, k)
    assert aq_binomial(n, k) == aq_binomial(n, n - k)


def test_q_analogues():
    assert q_number(1) == ONE
    assert q_binomial(4, 2) == RatExpr(1 + Q + 2 * Q**2 + Q**3 + Q**4)
    assert q_factorial(2) == RatExpr(1 + Q)
