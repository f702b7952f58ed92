"""Unreduced quotients of Laurent polynomials.

A :class:`RatExpr` is stored as ``poly * prod(f**e for f, e in factors)``
where every factor ``f`` is a normalized non-monomial Laurent polynomial (its
lowest term is the constant 1) and ``e`` is a nonzero integer.  Negative
exponents make up the denominator.  Factors are matched syntactically, which
gives cheap common denominators for sums and cancellation in products without
any polynomial gcd.  Equality is cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from aqrook.errors import DivergentLimit, DivisionByZero, EvalPole, OddBExponent, ParseError
from aqrook.exactalg.laurent import (
    ONE as P_ONE,
    ZERO as P_ZERO,
    LaurentPoly,
    Monomial,
    _accumulate,
    format_poly,
    parse_poly,
)

Factors = Mapping[LaurentPoly, int]


def normalize_factor(p: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Split ``p`` as ``unit * f`` with ``f`` having lowest term 1."""
    m, c = p.lowest()
    unit = LaurentPoly.monomial(*m, coeff=c)
    f = p.shift(Monomial(-m.e_s, -m.e_b, -m.e_z)).scale(Fraction(1) / Fraction(c))
    return unit, f


@lru_cache(maxsize=8192)
def _fpow(f: LaurentPoly, e: int) -> LaurentPoly:
    return f ** e


class RatExpr:
    __slots__ = ("_poly", "_factors")

    def __init__(self, num: Union[LaurentPoly, int, Fraction] = 0,
                 den: Union[LaurentPoly, int, Fraction] = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self._poly, self._factors = P_ZERO, {}
        elif den.is_monomial():
            self._poly, self._factors = num * den ** -1, {}
        else:
            unit, f = normalize_factor(den)
            self._poly, self._factors = num * unit ** -1, {f: -1}

    @classmethod
    def _make(cls, poly: LaurentPoly, factors: Dict[LaurentPoly, int]) -> "RatExpr":
        x = cls.__new__(cls)
        if poly.is_zero():
            x._poly, x._factors = P_ZERO, {}
        else:
            x._poly, x._factors = poly, factors
        return x

    @classmethod
    def factor(cls, p: LaurentPoly, e: int = 1) -> "RatExpr":
        """``p**e`` kept in factored form."""
        if p.is_zero():
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return ZERO if e else ONE
        if p.is_monomial() or e == 0:
            return cls._make(p ** e, {})
        unit, f = normalize_factor(p)
        return cls._make(unit ** e, {f: e})

    @classmethod
    def monomial(cls, e_s: int = 0, e_b: int = 0, e_z: int = 0, coeff=1) -> "RatExpr":
        return cls._make(LaurentPoly.monomial(e_s, e_b, e_z, coeff), {})

    # -- views -----------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        p = self._poly
        for f, e in self._factors.items():
            if e > 0:
                p = p * _fpow(f, e)
        return p

    @property
    def den(self) -> LaurentPoly:
        p = P_ONE
        for f, e in self._factors.items():
            if e < 0:
                p = p * _fpow(f, -e)
        return p

    @property
    def factors(self) -> Dict[LaurentPoly, int]:
        return dict(self._factors)

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def is_unit(self) -> bool:
        """True when the value is ``c * monomial`` with no stored factors."""
        return not self._factors and self._poly.is_monomial()

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "RatExpr":
        return RatExpr._make(-self._poly, self._factors)

    def __add__(self, other) -> "RatExpr":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ratsum((self, other))

    __radd__ = __add__

    def __sub__(self, other) -> "RatExpr":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ratsum((self, -other))

    def __rsub__(self, other) -> "RatExpr":
        return (-self) + other

    def __mul__(self, other) -> "RatExpr":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        factors = dict(self._factors)
        for f, e in other._factors.items():
            e += factors.get(f, 0)
            if e:
                factors[f] = e
            else:
                del factors[f]
        return RatExpr._make(self._poly * other._poly, factors)

    __rmul__ = __mul__

    def inverse(self) -> "RatExpr":
        if self.is_zero():
            raise DivisionByZero("division by an expression with zero numerator")
        factors = {f: -e for f, e in self._factors.items()}
        p = self._poly
        if p.is_monomial():
            return RatExpr._make(p ** -1, factors)
        unit, f = normalize_factor(p)
        e = factors.get(f, 0) - 1
        if e:
            factors[f] = e
        else:
            del factors[f]
        return RatExpr._make(unit ** -1, factors)

    def __truediv__(self, other) -> "RatExpr":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatExpr":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RatExpr":
        if n < 0:
            return self.inverse() ** -n
        if n == 0:
            return ONE
        return RatExpr._make(self._poly ** n, {f: e * n for f, e in self._factors.items()})

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ratexpr_equal(self, other)

    __hash__ = None  # equality is not syntactic

    def cross_sides(self, other: "RatExpr") -> Tuple[LaurentPoly, LaurentPoly]:
        """``(self.num * other.den, other.num * self.den)`` after dropping shared factors."""
        lhs, rhs = self._poly, other._poly
        for f in set(self._factors) | set(other._factors):
            e1, e2 = self._factors.get(f, 0), other._factors.get(f, 0)
            common = min(e1, e2)
            if e1 > common:
                lhs = lhs * _fpow(f, e1 - common)
            if e2 > common:
                rhs = rhs * _fpow(f, e2 - common)
        return lhs, rhs

    # -- transforms ------------------------------------------------------

    def substitute_a(self, e: int) -> "RatExpr":
        return substitute_a(self, e)

    def evaluate(self, s, b, z) -> Fraction:
        return evaluate(self, (s, b, z))

    def b_exponents(self) -> set:
        out = set(self._poly.b_exponents())
        for f in self._factors:
            out |= f.b_exponents()
        return out

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        return format_ratexpr(self)

    def __repr__(self) -> str:
        return f"RatExpr({format_ratexpr(self)!r})"


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _coerce(x):
    if isinstance(x, RatExpr):
        return x
    if isinstance(x, (LaurentPoly, int, Fraction)):
        return RatExpr._make(_as_poly(x), {})
    return NotImplemented


def as_ratexpr(x) -> RatExpr:
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to RatExpr")
    return out


ZERO = RatExpr._make(P_ZERO, {})
ONE = RatExpr._make(P_ONE, {})


def ratsum(items: Iterable[RatExpr]) -> RatExpr:
    """Sum over a shared denominator built from the union of factor multisets."""
    items = [x for x in map(as_ratexpr, items) if not x.is_zero()]
    if not items:
        return ZERO
    if len(items) == 1:
        return items[0]
    keys = set()
    for x in items:
        keys.update(x._factors)
    common = {f: min(x._factors.get(f, 0) for x in items) for f in keys}
    data: Dict[int, object] = {}
    for x in items:
        p = x._poly
        for f in keys:
            extra = x._factors.get(f, 0) - common[f]
            if extra:
                p = p * _fpow(f, extra)
        _accumulate(data, p._terms)
    total = LaurentPoly._raw(data)
    return RatExpr._make(total, {f: e for f, e in common.items() if e})


def ratexpr_arith(x: RatExpr, y: RatExpr, op: str) -> RatExpr:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def ratexpr_equal(x: RatExpr, y: RatExpr) -> bool:
    """Cross-multiplication test ``x.num * y.den == y.num * x.den``.

    Factors present on both sides are divided out first; the Laurent ring is
    an integral domain, so this does not change the answer.
    """
    lhs, rhs = as_ratexpr(x).cross_sides(as_ratexpr(y))
    return lhs == rhs


def evaluate(x: RatExpr, point) -> Fraction:
    s, b, z = (Fraction(v) for v in point)
    value = x._poly.evaluate(s, b, z)
    for f, e in x._factors.items():
        fv = f.evaluate(s, b, z)
        if fv == 0:
            if e < 0:
                raise EvalPole(f"denominator vanishes at {point}")
            return Fraction(0)
        value *= fv ** e
    if x._poly.is_zero():
        return Fraction(0)
    return value


def substitute_a(x: RatExpr, e: int) -> RatExpr:
    """Apply ``a -> a*q**e`` (``b -> b*s**e``)."""
    x = as_ratexpr(x)
    if any(j % 2 for j in x.b_exponents()):
        # normalization may have moved an odd unit between poly and factors
        if any(j % 2 for j in x.num.b_exponents() | x.den.b_exponents()):
            raise OddBExponent("a -> a*q^e needs even powers of b")
    if e == 0:
        return x
    out = RatExpr._make(x._poly.substitute_a(e), {})
    for f, k in x._factors.items():
        out = out * RatExpr.factor(f.substitute_a(e), k)
    return out


def shift_z(x: RatExpr, c: int) -> RatExpr:
    """Apply ``z -> z + c`` (``Z -> Z*q**c``)."""
    x = as_ratexpr(x)
    out = RatExpr._make(x._poly.shift_z(c), {})
    for f, k in x._factors.items():
        out = out * RatExpr.factor(f.shift_z(c), k)
    return out


def rescale_q(x: RatExpr, m: int) -> RatExpr:
    """Apply the ring map ``s -> s**m`` (``q -> q**m``) for ``m >= 1``."""
    if m < 1:
        raise ValueError("rescale factor must be positive")
    x = as_ratexpr(x)
    out = RatExpr._make(x._poly.rescale_q(m), {})
    for f, k in x._factors.items():
        out = out * RatExpr.factor(f.rescale_q(m), k)
    return out


def limit_a_infinity(x: RatExpr) -> RatExpr:
    """Limit as ``a -> oo``: ratio of the top-b-degree parts of num and den."""
    x = as_ratexpr(x)
    if x.is_zero():
        return ZERO
    deg_num = x._poly.b_degree()
    deg_den = 0
    out = RatExpr._make(x._poly.leading_b_part(), {})
    for f, e in x._factors.items():
        d = f.b_degree()
        if e > 0:
            deg_num += e * d
        else:
            deg_den -= e * d
        out = out * RatExpr.factor(f.leading_b_part(), e)
    if deg_num > deg_den:
        raise DivergentLimit(f"numerator b-degree {deg_num} exceeds denominator {deg_den}")
    if deg_num < deg_den:
        return ZERO
    return out


# -- text form -----------------------------------------------------------


def canonical_sides(x: RatExpr) -> Tuple[LaurentPoly, LaurentPoly]:
    """Expanded ``(num, den)`` scaled by one monomial and sign so that ``den``
    is a genuine polynomial divisible by no variable, with positive first term.
    """
    num, den = x.num, x.den
    if den.is_monomial():
        return num * den ** -1, P_ONE
    lows = [min(m[i] for m, _ in den.terms()) for i in range(3)]
    shift = Monomial(-lows[0], -lows[1], -lows[2])
    num, den = num.shift(shift), den.shift(shift)
    if den.lowest()[1] < 0:
        num, den = -num, -den
    return num, den


def format_ratexpr(x: RatExpr) -> str:
    num, den = canonical_sides(as_ratexpr(x))
    if den == P_ONE:
        return format_poly(num)
    return f"({format_poly(num)})/({format_poly(den)})"


def parse_ratexpr(text: str) -> RatExpr:
    """Parse ``poly`` or ``(poly)/(poly)``."""
    text = text.strip()
    if text.startswith("("):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        else:
            raise ParseError(f"unbalanced parentheses in {text!r}")
        num_text, rest = text[1:i], text[i + 1:].strip()
        if not rest:
            return RatExpr(parse_poly(num_text))
        if not (rest.startswith("/(") and rest.endswith(")")):
            raise ParseError(f"expected '/(den)' in {text!r}")
        return RatExpr(parse_poly(num_text), parse_poly(rest[2:-1]))
    return RatExpr(parse_poly(text))
