"""q-shifted factorials and the (a;q)-weights, numbers and binomials.

Exponents are given in powers of ``q`` unless a name says otherwise; ``q**k``
is the monomial ``s**(2k)``.  ``a_shift`` means the weight is taken at
``a*q**a_shift`` instead of ``a``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from aqrook.exactalg.laurent import LaurentPoly, Monomial
from aqrook.exactalg.ratexpr import ONE, ZERO, RatExpr, as_ratexpr


class LinearArg(NamedTuple):
    """The argument ``z_coeff*z + offset`` of an (a;q)-number."""

    z_coeff: int
    offset: int

    def qpower(self) -> LaurentPoly:
        """``q**arg`` as the monomial ``Z**z_coeff * s**(2*offset)``."""
        return LaurentPoly.monomial(e_s=2 * self.offset, e_z=self.z_coeff)


def q(k: int = 1) -> Monomial:
    return Monomial(e_s=2 * k)


def qmono(k=0, a=0, z=0, coeff=1) -> RatExpr:
    """``coeff * q**k * a**a * Z**z``; half-integer ``k``/``a`` are allowed."""
    e_s, e_b = 2 * k, 2 * a
    if e_s != int(e_s) or e_b != int(e_b):
        raise ValueError("exponents must be multiples of 1/2")
    return RatExpr.monomial(int(e_s), int(e_b), z, coeff)


def _one_minus(u: RatExpr) -> RatExpr:
    if u.is_unit():
        return RatExpr.factor(1 - u.num)
    return ONE - u


def pochhammer(u, step: Monomial, n: int) -> RatExpr:
    """``(u; step)_n = prod_{i<n} (1 - u*step**i)``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    u = as_ratexpr(u)
    step_poly = LaurentPoly.monomial(*step)
    out = ONE
    for i in range(n):
        term = _one_minus(u * step_poly ** i)
        if term.is_zero():
            return ZERO
        out = out * term
    return out


def pochhammer_multi(us, step: Monomial, n: int) -> RatExpr:
    """``(u_1, ..., u_m; step)_n``."""
    out = ONE
    for u in us:
        out = out * pochhammer(u, step, n)
    return out


def _a_factor(q_exp: int) -> RatExpr:
    # 1 - a*q**q_exp
    return RatExpr.factor(1 - LaurentPoly.monomial(e_s=2 * q_exp, e_b=2))


@lru_cache(maxsize=4096)
def small_weight(k: int, a_shift: int = 0) -> RatExpr:
    """``w_{a q^a_shift; q}(k) = (1 - a q^(2k+1)) / (1 - a q^(2k-1)) / q``."""
    return _a_factor(a_shift + 2 * k + 1) / _a_factor(a_shift + 2 * k - 1) * qmono(-1)


@lru_cache(maxsize=4096)
def big_weight(k: int, a_shift: int = 0) -> RatExpr:
    """``W_{a q^a_shift; q}(k) = (1 - a q^(2k+1)) / (1 - a q) * q^(-k)`` for any integer k."""
    return _a_factor(a_shift + 2 * k + 1) / _a_factor(a_shift + 1) * qmono(-k)


@lru_cache(maxsize=4096)
def aq_number(arg: LinearArg, a_shift: int = 0) -> RatExpr:
    """``[arg]_{a q^a_shift; q}``."""
    arg = LinearArg(*arg)
    if arg.z_coeff not in (0, 1):
        raise ValueError("z_coeff must be 0 or 1")
    qa = arg.qpower()
    if qa == 1:
        return ZERO
    a_qa = qa * LaurentPoly.monomial(e_s=2 * a_shift, e_b=2)
    numer = RatExpr.factor(1 - qa) * RatExpr.factor(1 - a_qa) * (qmono(1) / RatExpr(qa))
    return numer / (RatExpr.factor(1 - LaurentPoly.monomial(e_s=2)) * _a_factor(a_shift + 1))


def aq_factorial(n: int) -> RatExpr:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for i in range(1, n + 1):
        out = out * aq_number(LinearArg(0, i))
    return out


def aq_binomial(n: int, k: int) -> RatExpr:
    """Product form ``(q^(1+k), a q^(1+k); q)_(n-k) / (q, a q; q)_(n-k) * q^(k(k-n))``."""
    if k < 0 or k > n:
        return ZERO
    m = n - k
    top = pochhammer_multi([qmono(1 + k), qmono(1 + k, a=1)], q(), m)
    bottom = pochhammer_multi([qmono(1), qmono(1, a=1)], q(), m)
    return top / bottom * qmono(k * (k - n))


def aq_binomial_factorial_form(n: int, k: int) -> RatExpr:
    if k < 0 or k > n:
        return ZERO
    return aq_factorial(n) / (aq_factorial(k) * aq_factorial(n - k))


def q_number(z: int) -> RatExpr:
    """``[z]_q = (1 - q^z) / (1 - q)``."""
    if z == 0:
        return ZERO
    return RatExpr.factor(1 - LaurentPoly.monomial(e_s=2 * z)) / RatExpr.factor(
        1 - LaurentPoly.monomial(e_s=2)
    )


def q_factorial(n: int) -> RatExpr:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_number(i)
    return out


def q_binomial(n: int, k: int) -> RatExpr:
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))

