"""Sparse Laurent polynomials in ``b``, ``s`` and ``Z`` over the rationals.

The library works in the square-root variables ``q = s**2``, ``a = b**2`` and
``Z = q**z``.  A term is stored under a single packed integer key so that
monomial multiplication is integer addition; the packing is order preserving,
so sorting keys sorts monomials lexicographically on ``(e_b, e_s, e_Z)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

from aqrook.errors import EvalPole, ParseError

Scalar = Union[int, Fraction]

_RADIX = 1 << 20
_HALF = _RADIX >> 1

VARIABLES = ("b", "s", "Z")


class Monomial(NamedTuple):
    """Exponent triple of ``s**e_s * b**e_b * Z**e_z``."""

    e_s: int = 0
    e_b: int = 0
    e_z: int = 0

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(self.e_s + other.e_s, self.e_b + other.e_b, self.e_z + other.e_z)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial(self.e_s * n, self.e_b * n, self.e_z * n)


def pack(m: Monomial) -> int:
    e_s, e_b, e_z = m
    if max(abs(e_s), abs(e_b), abs(e_z)) >= _HALF:
        raise OverflowError(f"exponent out of range: {m}")
    return (e_b * _RADIX + e_s) * _RADIX + e_z


def unpack(key: int) -> Monomial:
    e_z = (key + _HALF) % _RADIX - _HALF
    key = (key - e_z) // _RADIX
    e_s = (key + _HALF) % _RADIX - _HALF
    e_b = (key - e_s) // _RADIX
    return Monomial(e_s, e_b, e_z)


def _norm_scalar(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm_scalar(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class LaurentPoly:
    """Immutable finitely supported map ``Monomial -> rational``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: Dict[int, Scalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                c = _norm_scalar(c)
                if not c:
                    continue
                key = pack(Monomial(*mono))
                c = data.get(key, 0) + c
                if c:
                    data[key] = c
                else:
                    del data[key]
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, data: Dict[int, Scalar]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = data
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        c = _norm_scalar(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e_s: int = 0, e_b: int = 0, e_z: int = 0, coeff=1) -> "LaurentPoly":
        c = _norm_scalar(coeff)
        return cls._raw({pack(Monomial(e_s, e_b, e_z)): c} if c else {})

    # -- inspection -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        """True for a single term ``c * m`` (a unit of the Laurent ring)."""
        return len(self._terms) == 1

    def terms(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in canonical (ascending) order."""
        for key in sorted(self._terms):
            yield unpack(key), self._terms[key]

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(pack(Monomial(*m)), 0)

    def lowest(self) -> Tuple[Monomial, Scalar]:
        key = min(self._terms)
        return unpack(key), self._terms[key]

    def b_degree(self) -> int:
        return max(unpack(k).e_b for k in self._terms)

    def b_exponents(self) -> set:
        return {unpack(k).e_b for k in self._terms}

    # -- ring operations --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        data = dict(self._terms)
        _accumulate(data, other._terms)
        return LaurentPoly._raw(data)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return ZERO
        if len(b) == 1:
            ((kb, cb),) = b.items()
            return LaurentPoly._raw({ka + kb: ca * cb for ka, ca in a.items()})
        out: Dict[int, Scalar] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((k, c),) = self._terms.items()
            # packing is linear, so k * n is the key of m**n
            return LaurentPoly._raw({k * n: _norm_scalar(Fraction(c) ** n)})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, m: Monomial) -> "LaurentPoly":
        """Multiply by the monomial ``m``."""
        d = pack(Monomial(*m))
        return LaurentPoly._raw({k + d: c for k, c in self._terms.items()})

    def scale(self, c) -> "LaurentPoly":
        c = _norm_scalar(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({k: _norm_scalar(v * c) for k, v in self._terms.items()})

    # -- maps ------------------------------------------------------------

    def map_monomials(self, fn) -> "LaurentPoly":
        """Apply ``fn: Monomial -> Monomial`` termwise (collisions are summed)."""
        return LaurentPoly((fn(unpack(k)), c) for k, c in self._terms.items())

    def substitute_a(self, e: int) -> "LaurentPoly":
        """``a -> a*q**e``, i.e. ``b -> b*s**e``."""
        return self.map_monomials(lambda m: Monomial(m.e_s + e * m.e_b, m.e_b, m.e_z))

    def shift_z(self, c: int) -> "LaurentPoly":
        """``z -> z + c``, i.e. ``Z -> Z*s**(2c)``."""
        return self.map_monomials(lambda m: Monomial(m.e_s + 2 * c * m.e_z, m.e_b, m.e_z))

    def rescale_q(self, m: int) -> "LaurentPoly":
        """``q -> q**m`` with ``a`` and ``Z`` fixed, i.e. ``s -> s**m``."""
        return self.map_monomials(lambda mono: Monomial(m * mono.e_s, mono.e_b, mono.e_z))

    def leading_b_part(self) -> "LaurentPoly":
        """Terms of maximal b-degree, with the b-power stripped."""
        top = self.b_degree()
        return LaurentPoly(
            ((m.e_s, 0, m.e_z), c) for m, c in self.terms() if m.e_b == top
        )

    def evaluate(self, s, b, z) -> Fraction:
        point = (Fraction(s), Fraction(b), Fraction(z))
        total = Fraction(0)
        for m, c in self.terms():
            value = Fraction(c)
            for x, e in zip(point, m):
                if e < 0 and x == 0:
                    raise EvalPole("negative power of a variable evaluated at 0")
                value *= x ** e
            total += value
        return total

    # -- text form -------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return NotImplemented


def _accumulate(data: Dict[int, Scalar], terms: Mapping[int, Scalar], sign: int = 1) -> None:
    """In-place ``data += sign * terms`` on raw term maps."""
    for k, c in terms.items():
        v = data.get(k, 0) + (c if sign == 1 else -c)
        if v:
            data[k] = v
        else:
            data.pop(k, None)


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    data: Dict[int, Scalar] = {}
    for p in polys:
        _accumulate(data, p._terms)
    return LaurentPoly._raw(data)


def poly_arith(x: LaurentPoly, y: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
S = LaurentPoly.monomial(e_s=1)
B = LaurentPoly.monomial(e_b=1)
Z = LaurentPoly.monomial(e_z=1)


def _format_term(m: Monomial, c: Scalar) -> str:
    factors = []
    for name, e in zip(VARIABLES, (m.e_b, m.e_s, m.e_z)):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    mag = abs(c)
    if not factors:
        return str(mag)
    if mag == 1:
        return "*".join(factors)
    return f"{mag}*" + "*".join(factors)


def format_poly(p: LaurentPoly) -> str:
    """Canonical text: ascending terms, each ``coeff*b^j*s^i*Z^k``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.terms()):
        body = _format_term(m, c)
        if c < 0:
            out.append("-" + body)
        else:
            out.append(("+" if i else "") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([bsZ])(?:\^(-?\d+))?|([*+\-]))")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly` (tolerant of whitespace and ordering)."""
    pos, n = 0, len(text)
    terms: Dict[Monomial, Scalar] = {}
    sign, coeff, mono, started = 1, None, [0, 0, 0], False

    def flush():
        if not started:
            raise ParseError(f"empty term in {text!r}")
        m = Monomial(mono[1], mono[0], mono[2])
        c = sign * (coeff if coeff is not None else 1)
        terms[m] = terms.get(m, 0) + c

    # after a factor only an operator may follow; after '*' only a factor
    need_factor = False
    while pos < n:
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected input at {pos} in {text!r}")
        pos = match.end()
        number, var, exp, op = match.groups()
        if number is not None or var is not None:
            if started and not need_factor:
                raise ParseError(f"missing operator before position {match.start()} in {text!r}")
            if number is not None:
                if coeff is not None or any(mono):
                    raise ParseError(f"misplaced coefficient in {text!r}")
                coeff = Fraction(number)
            else:
                mono[VARIABLES.index(var)] += int(exp) if exp is not None else 1
            started, need_factor = True, False
        elif op == "*":
            if not started or need_factor:
                raise ParseError(f"dangling '*' in {text!r}")
            need_factor = True
        else:
            if need_factor:
                raise ParseError(f"dangling '*' in {text!r}")
            if started:
                flush()
                sign, coeff, mono, started = 1, None, [0, 0, 0], False
            sign *= -1 if op == "-" else 1
    if need_factor:
        raise ParseError(f"dangling '*' in {text!r}")
    if not started:
        raise ParseError(f"empty or dangling term in {text!r}")
    flush()
    return LaurentPoly(terms)
