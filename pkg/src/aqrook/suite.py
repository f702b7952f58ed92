"""The acceptance grid: every criterion as a list of verification reports."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from itertools import combinations
from typing import Callable, Dict, List, Tuple

from aqrook import boards as bd
from aqrook import identities as ids
from aqrook import placements as pl
from aqrook import rookmodels as rm
from aqrook.exactalg import (
    LinearArg,
    RatExpr,
    aq_number,
    big_weight,
    limit_a_infinity,
    qmono,
    small_weight,
)
from aqrook.identities import VerificationReport, check_cases


@dataclass(frozen=True)
class SuiteBounds:
    rect_max: int = 4
    ferrers_cols: int = 4
    ferrers_height: int = 4
    append_max: int = 5
    lah_n: int = 4
    lah_recur_n: int = 3
    alpha_cols: int = 3
    alpha_height: int = 3
    alphas: Tuple[int, ...] = (0, 1, 2, 3)
    stair_n: int = 4
    match_n: int = 3
    match_N: Tuple[int, ...] = (2, 4, 6)
    include_sample_shifted: bool = True
    pfaff_n: int = 6
    pfaff_r: Tuple[int, ...] = (1, 2, 3)
    phi_n: int = 5
    binom_n: int = 8
    weight_range: int = 4
    split_y: int = 5
    limit_cols: int = 3
    limit_height: int = 5
    count_n: int = 4
    count_cols: int = 4
    count_height: int = 4

    def capped(self, max_n: int) -> "SuiteBounds":
        """Every size bound capped at ``max_n`` (at least 1)."""
        m = max(1, max_n)
        capped = {}
        for name, value in asdict(self).items():
            if isinstance(value, bool):
                capped[name] = value and m >= 4
            elif isinstance(value, int):
                capped[name] = min(value, m + 1 if name == "append_max" else m)
            elif name == "match_N":
                capped[name] = tuple(N for N in value if N <= 2 * m)
            else:
                capped[name] = tuple(value)
        return replace(self, **capped)


@dataclass
class CriterionResult:
    number: int
    title: str
    reports: List[VerificationReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.reports)

    @property
    def failures(self) -> List[VerificationReport]:
        return [r for r in self.reports if not r.holds]

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] criterion {self.number:2d}: {self.title} "
            f"({len(self.reports)} reports, {self.elapsed:.2f}s)"
        )


def bool_report(identity: str, params: Dict, fn: Callable[[], bool]) -> VerificationReport:
    start = time.perf_counter()
    holds = bool(fn())
    return VerificationReport(identity, params, holds, None, time.perf_counter() - start, 1)


def count_report(identity: str, params: Dict, got: int, expected: int) -> VerificationReport:
    witness = None if got == expected else {"case": "count", "lhs": str(got), "rhs": str(expected)}
    return VerificationReport(identity, params, got == expected, witness, 0.0, 1)


# -- criteria -------------------------------------------------------------


def crit_rectangle(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for l in range(1, b.rect_max + 1):
        for m in range(1, b.rect_max + 1):
            cases = (
                (f"k={k}", rm.rook_standard(bd.rectangle(l, m), k), rm.closed_rect(l, m, k))
                for k in range(min(l, m) + 1)
            )
            out.append(check_cases("closed-rect", {"l": l, "m": m}, cases))
    return out


def crit_product_standard(b: SuiteBounds) -> List[VerificationReport]:
    return [ids.verify_product_standard(B) for B in bd.enumerate_ferrers(b.ferrers_cols, b.ferrers_height)]


def crit_recursion(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for B in bd.enumerate_ferrers(b.ferrers_cols, b.ferrers_height):
        for m in range(B.max_height, b.append_max + 1):
            out.append(
                bool_report("recur-standard", {"board": list(B.heights), "m": m},
                            lambda B=B, m=m: rm.recur_standard_check(B, m))
            )
    return out


def crit_lah(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for n in range(1, b.lah_n + 1):
        for r in range(1, n + 1):
            cases = (
                (f"k={k}", rm.lah_number(n, r, k), rm.closed_lah(n, r, k))
                for k in range(r - 1, n + 2)
            )
            out.append(check_cases("closed-lah", {"n": n, "r": r}, cases))
            out.append(ids.verify_lah_product(n, r))
            lhs, rhs = ids.lah_from_standard_product(n, r)
            lah_lhs, lah_rhs = ids.lah_product_sides(n, r)
            out.append(check_cases("lah-from-standard", {"n": n, "r": r},
                                   [("lhs", lhs, lah_lhs), ("rhs", rhs, lah_rhs)]))
    for n in range(1, b.lah_recur_n + 1):
        for r in range(1, n + 1):
            out.append(bool_report("recur-lah", {"n": n, "r": r}, lambda n=n, r=r: rm.recur_lah_check(n, r)))
    return out


def crit_alpha(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    grid = bd.enumerate_ferrers(b.alpha_cols, b.alpha_height)
    for B in grid:
        for alpha in b.alphas:
            out.append(ids.verify_product_alpha(B, alpha))
    for B in grid:
        cases = (
            (f"k={k}", rm.rook_alpha(B, k, 0), rm.rook_standard(B, k))
            for k in range(B.n_cols + 1)
        )
        out.append(check_cases("alpha0-standard", {"board": list(B.heights)}, cases))
    for n in range(1, b.stair_n + 1):
        cases = (
            (f"k={k}", rm.closed_staircase2(n, k), rm.rook_alpha(bd.staircase(n), k, 2))
            for k in range(n + 1)
        )
        out.append(check_cases("closed-staircase2", {"n": n}, cases))
    return out


def crit_matching(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for n in range(1, b.match_n + 1):
        cases = (
            (f"k={k}", rm.closed_matching(n, k), rm.rook_matching(bd.matching_full(n), k))
            for k in range(n + 1)
        )
        out.append(check_cases("closed-matching", {"n": n}, cases))
    for N in b.match_N:
        out.append(bool_report("recur-matching", {"N": N}, lambda N=N: rm.recur_matching_check(N)))
    for SB in bd.enumerate_shifted(b.match_n):
        out.append(ids.verify_product_matching(SB))
    if b.include_sample_shifted:
        out.append(ids.verify_product_matching(bd.shifted([7, 5, 4, 2, 0, 0, 0], 4)))
    return out


def crit_hypergeometric(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for n in range(b.pfaff_n + 1):
        for r in b.pfaff_r:
            out.append(ids.verify_qpfaff(n, r))
            out.append(ids.verify_pfaff_standard_form(n, r))
    for n in range(b.phi_n + 1):
        out.append(ids.verify_jain(n))
        out.append(ids.verify_whipple_special(n))
        out.append(ids.verify_matching_saalschutz(n))
        out.append(ids.verify_reversal(n))
    return out


def crit_algebra(b: SuiteBounds) -> List[VerificationReport]:
    out = [ids.verify_binomial_recursions(b.binom_n + 1)]
    R = b.weight_range
    cases = (
        (f"k={k} n={n}", big_weight(k + n), big_weight(k) * big_weight(n, 2 * k))
        for k in range(-R, R + 1)
        for n in range(-R, R + 1)
    )
    out.append(check_cases("W-multiplicativity", {"range": R}, cases))
    cases = (
        (
            f"y={y}",
            aq_number(LinearArg(1, y)),
            aq_number(LinearArg(0, y)) + big_weight(y) * aq_number(LinearArg(1, 0), 2 * y),
        )
        for y in range(b.split_y + 1)
    )
    out.append(check_cases("aq-number-splitting", {"y_max": b.split_y}, cases))
    cases = (
        (f"W(k) = prod w, k={k}", big_weight(k), _prod_small(k)) for k in range(1, R + 1)
    )
    out.append(check_cases("W-product-of-w", {"k_max": R}, cases))
    z_limit = (1 - qmono(0, z=1)) / (1 - qmono(1))
    cases = []
    for k in range(-R, R + 1):
        cases.append((f"lim w({k})", limit_a_infinity(small_weight(k)), qmono(1)))
        cases.append((f"lim W({k})", limit_a_infinity(big_weight(k)), qmono(k)))
    cases.append(("lim [z]", limit_a_infinity(aq_number(LinearArg(1, 0))), z_limit))
    out.append(check_cases("a-infinity-limits", {"range": R}, cases))
    for B in bd.enumerate_ferrers(b.limit_cols, b.limit_height):
        out.append(
            bool_report(
                "q-rook-limit",
                {"board": list(B.heights)},
                lambda B=B: all(rm.q_rook_limit_check(B, k) for k in range(B.n_cols + 1)),
            )
        )
    return out


def _prod_small(k: int) -> RatExpr:
    out = qmono(0)
    for i in range(1, k + 1):
        out = out * small_weight(i)
    return out


def _elementary(heights, k: int) -> int:
    return sum(math.prod(c) for c in combinations(heights, k))


def crit_counts(b: SuiteBounds) -> List[VerificationReport]:
    out = []
    for n in range(1, b.count_n + 1):
        got = len(pl.nonattacking(bd.rectangle(n, n), n))
        out.append(count_report("count-nonattacking", {"n": n}, got, math.factorial(n)))
        got = len(pl.matchings(bd.matching_full(n), n))
        out.append(count_report("count-matchings", {"n": n}, got, math.prod(range(1, 2 * n, 2))))
    for B in bd.enumerate_ferrers(b.count_cols, b.count_height):
        for k in range(B.n_cols + 1):
            got = len(pl.file(B, k))
            out.append(count_report("count-file", {"board": list(B.heights), "k": k}, got,
                                    _elementary(B.heights, k)))
    return out


def crit_cli(b: SuiteBounds) -> List[VerificationReport]:
    from aqrook.cli import cli_contract_reports

    return cli_contract_reports()


CRITERIA: List[Tuple[int, str, Callable[[SuiteBounds], List[VerificationReport]]]] = [
    (1, "rectangle closed form", crit_rectangle),
    (2, "standard product formula", crit_product_standard),
    (3, "column recursion", crit_recursion),
    (4, "r-restricted Lah numbers", crit_lah),
    (5, "alpha-parameter model", crit_alpha),
    (6, "matching model", crit_matching),
    (7, "hypergeometric summations", crit_hypergeometric),
    (8, "(a;q)-algebra and q-limits", crit_algebra),
    (9, "classical counts", crit_counts),
    (10, "CLI contract", crit_cli),
]


def run_criterion(number: int, bounds: SuiteBounds = SuiteBounds()) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            reports = fn(bounds)
            return CriterionResult(num, title, reports, time.perf_counter() - start)
    raise KeyError(f"no criterion {number}")


def _run_one(args):
    number, bounds = args
    return run_criterion(number, bounds)


def run_suite(bounds: SuiteBounds = SuiteBounds(), workers: int = 1) -> List[CriterionResult]:
    """Run every criterion; results come back in criterion order regardless of ``workers``."""
    jobs = [(num, bounds) for num, _, _ in CRITERIA]
    if workers <= 1:
        return [_run_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))
