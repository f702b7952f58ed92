"""Both sides of every product formula and summation, checked as exact identities.

All sides are symbolic in ``a = b**2`` and ``Z = q**z``; summands are built in
factored form and only combined at the final equality test.
"""

from __future__ import annotations

import time
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from aqrook.boards import FerrersBoard, ShiftedBoard, lah_board
from aqrook.errors import DegenerateParameters, InvalidFamilyParams
from aqrook.exactalg import (
    ONE,
    ZERO,
    LinearArg,
    RatExpr,
    aq_binomial,
    aq_binomial_factorial_form,
    aq_number,
    parse_ratexpr,
    pochhammer,
    pochhammer_multi,
    q,
    qmono,
    ratexpr_equal,
    ratsum,
    rescale_q,
    shift_z,
    substitute_a,
)
from aqrook.rookmodels import lah_number, rook_alpha, rook_matching, rook_standard

Case = Tuple[str, RatExpr, RatExpr]

HALF = Fraction(1, 2)


@dataclass
class VerificationReport:
    identity: str
    params: Dict[str, Any]
    holds: bool
    witness: Optional[Dict[str, str]] = None
    elapsed: float = 0.0
    checked: int = 0

    def to_json(self) -> Dict[str, Any]:
        out = {
            "identity": self.identity,
            "params": self.params,
            "holds": self.holds,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "VerificationReport":
        return cls(
            identity=data["identity"],
            params=dict(data["params"]),
            holds=bool(data["holds"]),
            witness=data.get("witness"),
            elapsed=data.get("elapsed_ms", 0.0) / 1000,
        )

    def witness_sides(self) -> Optional[Tuple[RatExpr, RatExpr]]:
        if self.witness is None:
            return None
        return parse_ratexpr(self.witness["lhs"]), parse_ratexpr(self.witness["rhs"])


def check_cases(identity: str, params: Dict[str, Any], cases: Iterable[Case]) -> VerificationReport:
    """Run ``(label, lhs, rhs)`` cases in order, stopping at the first failure."""
    start = time.perf_counter()
    count = 0
    for label, lhs, rhs in cases:
        count += 1
        if not ratexpr_equal(lhs, rhs):
            witness = {"case": label, "lhs": str(lhs), "rhs": str(rhs)}
            return VerificationReport(identity, params, False, witness, time.perf_counter() - start, count)
    return VerificationReport(identity, params, True, None, time.perf_counter() - start, count)


def _prod(xs: Iterable[RatExpr]) -> RatExpr:
    out = ONE
    for x in xs:
        out = out * x
    return out


def zq(offset: int) -> LinearArg:
    """The argument ``z + offset``."""
    return LinearArg(1, offset)


# -- standard model ------------------------------------------------------


def falling_basis(k: int) -> RatExpr:
    """``prod_{j=1}^k [z-j+1]_{a q^(2(j-1)); q}``."""
    return _prod(aq_number(zq(1 - j), 2 * (j - 1)) for j in range(1, k + 1))


def product_standard_sides(board: FerrersBoard) -> Tuple[RatExpr, RatExpr]:
    n = board.n_cols
    lhs = _prod(
        aq_number(zq(b_i - i + 1), 2 * (i - 1 - b_i)) for i, b_i in enumerate(board.heights, 1)
    )
    rhs = ratsum(rook_standard(board, n - k) * falling_basis(k) for k in range(n + 1))
    return lhs, rhs


def verify_product_standard(board: FerrersBoard) -> VerificationReport:
    def cases():
        lhs, rhs = product_standard_sides(board)
        yield "product", lhs, rhs

    return check_cases("product-standard", {"board": list(board.heights)}, cases())


def _check_lah_params(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise InvalidFamilyParams(f"need 1 <= r <= n, got n={n}, r={r}")


def lah_product_sides(n: int, r: int) -> Tuple[RatExpr, RatExpr]:
    _check_lah_params(n, r)
    lhs = _prod(aq_number(zq(n - i), 2 * (i - n)) for i in range(1, n - r + 1)) * _prod(
        aq_number(zq(1 - i), 2 * (i - 1)) for i in range(1, r + 1)
    )
    rhs = ratsum(lah_number(n, r, k) * falling_basis(k) for k in range(r, n + 1))
    return lhs, rhs


def verify_lah_product(n: int, r: int) -> VerificationReport:
    _check_lah_params(n, r)

    def cases():
        lhs, rhs = lah_product_sides(n, r)
        yield "product", lhs, rhs

    return check_cases("lah-product", {"n": n, "r": r}, cases())


def lah_from_standard_product(n: int, r: int) -> Tuple[RatExpr, RatExpr]:
    """The standard product formula on ``L_n^(r)`` turned into the Lah one.

    Apply ``a -> a q^(2(1-r))`` and ``z -> z + r - 1``, then divide both sides
    by the ``r - 1`` factors ``[z-u+1]_{a q^(2(u-1))}``, ``2-r <= u <= 0``,
    which every basis product and the left side share.
    """
    _check_lah_params(n, r)
    common = _prod(aq_number(zq(1 - u), 2 * (u - 1)) for u in range(2 - r, 1))
    lhs, rhs = product_standard_sides(lah_board(n, r))
    move = lambda x: shift_z(substitute_a(x, 2 * (1 - r)), r - 1) / common
    return move(lhs), move(rhs)


# -- q-Pfaff-Saalschutz -------------------------------------------------


def _check_pfaff_params(n: int, r: int) -> None:
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")
    if r < 0 or (r == 0 and n >= 1):
        raise DegenerateParameters(f"(q^(2r);q)_n vanishes for r={r}, n={n}")


def qpfaff_lhs(n: int, r: int) -> RatExpr:
    return pochhammer(qmono(r, z=1), q(), n) * pochhammer(qmono(r, a=-1, z=-1), q(), n) / (
        pochhammer(qmono(0, a=-1), q(), n) * pochhammer(qmono(2 * r), q(), n)
    )


def qpfaff_term(n: int, r: int, k: int) -> RatExpr:
    top = pochhammer_multi([qmono(-n), qmono(r, z=-1), qmono(r, a=1, z=1)], q(), k)
    bottom = pochhammer_multi([qmono(1), qmono(2 * r), qmono(1 - n, a=1)], q(), k)
    return top / bottom * qmono(k)


def verify_qpfaff(n: int, r: int) -> VerificationReport:
    _check_pfaff_params(n, r)

    def cases():
        yield "sum", qpfaff_lhs(n, r), ratsum(qpfaff_term(n, r, k) for k in range(n + 1))

    return check_cases("qpfaff", {"n": n, "r": r}, cases())


def pfaff_standard_form(A: RatExpr, B: RatExpr, C: RatExpr, n: int) -> Tuple[RatExpr, List[RatExpr]]:
    """``(C/A, C/B; q)_n / (C, C/AB; q)_n`` and the terms of the 3phi2 sum."""
    lhs = pochhammer_multi([C / A, C / B], q(), n) / pochhammer_multi([C, C / (A * B)], q(), n)
    last = A * B / C * qmono(1 - n)
    terms = [
        pochhammer_multi([A, B, qmono(-n)], q(), k)
        / pochhammer_multi([qmono(1), C, last], q(), k)
        * qmono(k)
        for k in range(n + 1)
    ]
    return lhs, terms


def verify_pfaff_standard_form(n: int, r: int) -> VerificationReport:
    """Substitute ``A = a q^(z+r)``, ``B = q^(r-z)``, ``C = q^(2r)`` and compare with :func:`verify_qpfaff`."""
    _check_pfaff_params(n, r)

    def cases():
        lhs, terms = pfaff_standard_form(qmono(r, a=1, z=1), qmono(r, z=-1), qmono(2 * r), n)
        yield "lhs", lhs, qpfaff_lhs(n, r)
        for k, t in enumerate(terms):
            yield f"term k={k}", t, qpfaff_term(n, r, k)
        yield "sum", lhs, ratsum(terms)

    return check_cases("pfaff-standard", {"n": n, "r": r}, cases())


# -- alpha model summations ----------------------------------------------


def jain_lhs(n: int) -> RatExpr:
    return pochhammer_multi([qmono(2, z=1), qmono(2, a=-1, z=-1)], q(2), n) / pochhammer_multi(
        [qmono(1), qmono(3, a=-1)], q(2), n
    )


def jain_term(n: int, k: int) -> RatExpr:
    top = pochhammer_multi(
        [qmono(-n), qmono(-n, coeff=-1), qmono(1, z=1), qmono(1, a=-1, z=-1)], q(), k
    )
    half = qmono(Fraction(3, 2), a=-HALF)
    bottom = pochhammer_multi([qmono(1), qmono(-2 * n), half, -half], q(), k)
    return top / bottom * qmono(k)


def jain_intro_form(A: RatExpr, B: RatExpr, n: int) -> Tuple[RatExpr, List[RatExpr]]:
    """Both sides of the 4phi3 summation with free parameters ``A``, ``B``."""
    lhs = pochhammer_multi([A * qmono(1), B * qmono(1)], q(2), n) / pochhammer_multi(
        [qmono(1), A * B * qmono(1)], q(2), n
    )
    terms = [
        pochhammer_multi([A, B], q(), k)
        * pochhammer(qmono(-2 * n), q(2), k)
        / (pochhammer_multi([qmono(1), qmono(-2 * n)], q(), k) * pochhammer(A * B * qmono(1), q(2), k))
        * qmono(k)
        for k in range(n + 1)
    ]
    return lhs, terms


def verify_jain(n: int) -> VerificationReport:
    """The 4phi3 summation, plus its agreement with ``A = q^(z+1)``, ``B = a^-1 q^(1-z)``."""
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")

    def cases():
        lhs = jain_lhs(n)
        terms = [jain_term(n, k) for k in range(n + 1)]
        yield "sum", lhs, ratsum(terms)
        intro_lhs, intro_terms = jain_intro_form(qmono(1, z=1), qmono(1, a=-1, z=-1), n)
        yield "intro lhs", intro_lhs, lhs
        for k, (t, u) in enumerate(zip(intro_terms, terms)):
            yield f"intro term k={k}", t, u

    return check_cases("jain", {"n": n}, cases())


def whipple_lhs(n: int) -> RatExpr:
    return pochhammer_multi([qmono(2, z=1), qmono(-2 * n, a=1, z=1)], q(2), n) / pochhammer_multi(
        [qmono(1, z=1), qmono(-n, a=1, z=1)], q(), n
    )


def whipple_term(n: int, k: int) -> RatExpr:
    c = qmono(-n - HALF, a=HALF)
    top = pochhammer_multi([qmono(-n), qmono(n + 1), c, -c], q(), k)
    bottom = pochhammer_multi(
        [qmono(1), qmono(1, coeff=-1), qmono(-n, z=-1), qmono(-n, a=1, z=1)], q(), k
    )
    return top / bottom * qmono(k)


def verify_whipple_special(n: int) -> VerificationReport:
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")

    def cases():
        yield "sum", whipple_lhs(n), ratsum(whipple_term(n, k) for k in range(n + 1))

    return check_cases("whipple", {"n": n}, cases())


def verify_reversal(n: int) -> VerificationReport:
    """``t1_k * R2 == t2_(n-k) * R1``: the two 4phi3 sums are reverses of each other."""
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")

    def cases():
        r1, r2 = jain_lhs(n), whipple_lhs(n)
        for k in range(n + 1):
            yield f"k={k}", jain_term(n, k) * r2, whipple_term(n, n - k) * r1

    return check_cases("reversal", {"n": n}, cases())


def alpha_basis(k: int, alpha: int) -> RatExpr:
    """``prod_{i=1}^k [z+(i-1)(alpha-1)]_{a q^(-2(i-1)(alpha-1)); q}``."""
    return _prod(
        aq_number(zq((i - 1) * (alpha - 1)), -2 * (i - 1) * (alpha - 1)) for i in range(1, k + 1)
    )


def product_alpha_sides(board: FerrersBoard, alpha: int) -> Tuple[RatExpr, RatExpr]:
    if alpha < 0:
        raise InvalidFamilyParams(f"alpha must be >= 0, got {alpha}")
    n = board.n_cols
    lhs = ONE
    for j, b_j in enumerate(board.heights, 1):
        e = b_j + (j - 1) * (alpha - 1)
        lhs = lhs * aq_number(zq(e), -2 * e)
    rhs = ratsum(rook_alpha(board, n - k, alpha) * alpha_basis(k, alpha) for k in range(n + 1))
    return lhs, rhs


def verify_product_alpha(board: FerrersBoard, alpha: int) -> VerificationReport:
    def cases():
        lhs, rhs = product_alpha_sides(board, alpha)
        yield "product", lhs, rhs

    return check_cases("product-alpha", {"board": list(board.heights), "alpha": alpha}, cases())


# -- matching model ------------------------------------------------------


def product_matching_sides(board: ShiftedBoard) -> Tuple[RatExpr, RatExpr]:
    if board.vertices % 2:
        raise InvalidFamilyParams("the matching product formula needs an even vertex count")
    n = board.n
    lhs = ONE
    for i in range(1, 2 * n):
        a = board.arm(2 * n - i)
        lhs = lhs * aq_number(zq(a - 2 * i + 2), 2 * (2 * i - 2 - a))
    rhs = ratsum(
        rook_matching(board, k)
        * _prod(aq_number(zq(2 - 2 * j), 4 * j - 4) for j in range(1, 2 * n - k))
        for k in range(n + 1)
    )
    return lhs, rhs


def verify_product_matching(board: ShiftedBoard) -> VerificationReport:
    def cases():
        lhs, rhs = product_matching_sides(board)
        yield "product", lhs, rhs

    return check_cases("product-matching", {"n": board.n, "arms": list(board.arms)}, cases())


def matching_saalschutz_lhs(n: int) -> RatExpr:
    """``(q^(z-n+3/2), a q^(z-1/2); q)_n / (q^(z-2n+2), a q^(z+n-1); q)_n``.

    This is the 3phi2 left side at ``A = q^(1/2-n)``, ``B = q^(5/2-2n)/a``,
    ``C = q^(z-2n+2)``; note ``C/AB = a q^(z+n-1)``.
    """
    top = pochhammer_multi([qmono(Fraction(3, 2) - n, z=1), qmono(-HALF, a=1, z=1)], q(), n)
    bottom = pochhammer_multi([qmono(2 - 2 * n, z=1), qmono(n - 1, a=1, z=1)], q(), n)
    return top / bottom


def matching_saalschutz_term(n: int, k: int) -> RatExpr:
    top = pochhammer_multi(
        [qmono(-n), qmono(HALF - n), qmono(Fraction(5, 2) - 2 * n, a=-1)], q(), k
    )
    bottom = pochhammer_multi([qmono(1), qmono(2 - 2 * n, z=1), qmono(2 - 2 * n, a=-1, z=-1)], q(), k)
    return top / bottom * qmono(k)


def matching_intermediate_lhs(n: int) -> RatExpr:
    """``(q^(-z-2), a q^(z-2); q)_2n / (q^(-z-2), a q^(z-2); q^2)_2n * q^(n(2n-1))``."""
    us = [qmono(-2, z=-1), qmono(-2, a=1, z=1)]
    return pochhammer_multi(us, q(), 2 * n) / pochhammer_multi(us, q(2), 2 * n) * qmono(n * (2 * n - 1))


def matching_intermediate_term(n: int, k: int) -> RatExpr:
    top = pochhammer_multi([qmono(-2 * n), qmono(1 - 2 * n), qmono(5 - 4 * n, a=-1)], q(2), k)
    bottom = pochhammer_multi([qmono(2), qmono(4 - 4 * n, z=1), qmono(4 - 4 * n, a=-1, z=-1)], q(2), k)
    return top / bottom * qmono(2 * k)


def verify_matching_saalschutz(n: int) -> VerificationReport:
    """The matching-model 3phi2 sum, its q^2 form, and the ``q^2 -> q`` link between them."""
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")

    def cases():
        lhs = matching_saalschutz_lhs(n)
        terms = [matching_saalschutz_term(n, k) for k in range(n + 1)]
        yield "sum", lhs, ratsum(terms)
        inter_lhs = matching_intermediate_lhs(n)
        inter_terms = [matching_intermediate_term(n, k) for k in range(n + 1)]
        yield "q^2 form", inter_lhs, ratsum(inter_terms)
        for k, (t, u) in enumerate(zip(terms, inter_terms)):
            yield f"q->q^2 term k={k}", rescale_q(t, 2), u
        yield "q->q^2 lhs", rescale_q(lhs, 2), inter_lhs
        A, B, C = qmono(HALF - n), qmono(Fraction(5, 2) - 2 * n, a=-1), qmono(2 - 2 * n, z=1)
        std_lhs, std_terms = pfaff_standard_form(A, B, C, n)
        yield "standard-form lhs", std_lhs, lhs
        for k, (t, u) in enumerate(zip(std_terms, terms)):
            yield f"standard-form term k={k}", t, u

    return check_cases("matching-saalschutz", {"n": n}, cases())


# -- (a;q)-binomial coefficients -----------------------------------------


def binomial_cases(n_max: int) -> Iterator[Case]:
    def rec1(n, k):
        c = qmono(2 * n + 2 - k, a=1)
        return aq_binomial(n, k) + (ONE - c) / (ONE - qmono(k, a=1)) * qmono(k - n - 1) * aq_binomial(n, k - 1)

    def rec2(n, k):
        c = (ONE - qmono(n + 1 + k, a=1)) / (ONE - qmono(n + 1 - k, a=1))
        return c * qmono(-k) * aq_binomial(n, k) + aq_binomial(n, k - 1)

    yield "[0,0] = 1", aq_binomial(0, 0), ONE
    for n in range(n_max + 1):
        for k in (-1, n + 1, n + 2):
            yield f"[{n},{k}] = 0", aq_binomial(n, k), ZERO
    for n in range(n_max):
        for k in range(0, n + 2):
            yield f"rec1 n={n} k={k}", aq_binomial(n + 1, k), rec1(n, k)
            yield f"rec2 n={n} k={k}", aq_binomial(n + 1, k), rec2(n, k)
    for n in range(n_max + 1):
        for k in range(n + 1):
            yield f"symmetry n={n} k={k}", aq_binomial(n, k), aq_binomial(n, n - k)
            yield f"factorial form n={n} k={k}", aq_binomial(n, k), aq_binomial_factorial_form(n, k)
    # each recursion alone, seeded with the initial values, rebuilds the table
    for name, rec in (("rec1", 1), ("rec2", 2)):
        table = {(0, 0): ONE}
        get = lambda n, k: table.get((n, k), ZERO)
        for n in range(n_max):
            for k in range(n + 2):
                if rec == 1:
                    c = (ONE - qmono(2 * n + 2 - k, a=1)) / (ONE - qmono(k, a=1)) * qmono(k - n - 1)
                    table[(n + 1, k)] = get(n, k) + c * get(n, k - 1)
                else:
                    c = (ONE - qmono(n + 1 + k, a=1)) / (ONE - qmono(n + 1 - k, a=1)) * qmono(-k)
                    table[(n + 1, k)] = c * get(n, k) + get(n, k - 1)
        for (n, k), value in sorted(table.items()):
            yield f"{name} table n={n} k={k}", value, aq_binomial(n, k)


def verify_binomial_recursions(n_max: int) -> VerificationReport:
    if n_max < 0:
        raise InvalidFamilyParams(f"need n_max >= 0, got {n_max}")
    return check_cases("binomial-recursions", {"n_max": n_max}, binomial_cases(n_max))

