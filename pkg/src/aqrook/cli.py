"""Command-line front end: ``compute``, ``table``, ``verify`` and ``suite``.

Exit codes: 0 success (identity holds), 1 identity or suite failure,
2 usage or validation error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple, Union

from aqrook import identities as ids
from aqrook import placements as pl
from aqrook.boards import FerrersBoard, ShiftedBoard, parse_board, parse_family
from aqrook.errors import AqrookError
from aqrook.exactalg import RatExpr, canonical_sides, format_poly, parse_ratexpr
from aqrook.identities import VerificationReport
from aqrook.rookmodels import rook_alpha, rook_matching, rook_standard

COMMANDS = ("compute", "verify", "suite", "table")
MODELS = ("standard", "alpha", "matching")
FORMATS = ("text", "json", "latex")
WORKERS_ENV = "AQROOK_WORKERS"

Board = Union[FerrersBoard, ShiftedBoard]


class UsageError(AqrookError, ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    model: str = "standard"
    identity: Optional[str] = None
    board: Optional[str] = None
    family: Optional[str] = None
    k: Optional[int] = None
    k_min: Optional[int] = None
    k_max: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    alpha: Optional[int] = None
    max_n: Optional[int] = None
    counts: bool = False
    fmt: str = "text"
    workers: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.model not in MODELS:
            raise UsageError(f"unknown model {self.model!r}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise UsageError(f"worker count must be >= 1, got {self.workers}")


def resolve_workers(flag: Optional[int], environ=None) -> int:
    """``--workers`` if given, else ``$AQROOK_WORKERS``, else 1."""
    if flag is not None:
        return flag
    raw = (os.environ if environ is None else environ).get(WORKERS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


# -- formatting ----------------------------------------------------------


def to_latex(x: RatExpr) -> str:
    num, den = canonical_sides(x)

    def tex(p) -> str:
        text = format_poly(p).replace("*", " ")
        return re.sub(r"\^(-?\d+)", r"^{\1}", text)

    if den.is_monomial():
        return tex(num)
    return rf"\frac{{{tex(num)}}}{{{tex(den)}}}"


# -- compute / table -----------------------------------------------------


def resolve_board(config: CliConfig) -> Board:
    if (config.board is None) == (config.family is None):
        raise UsageError("give exactly one of --board or --family")
    board = parse_board(config.board) if config.board is not None else parse_family(config.family)
    if config.model == "matching" and not isinstance(board, ShiftedBoard):
        raise UsageError("the matching model needs a shifted board (matchfull:n or shifted:n:...)")
    if config.model != "matching" and not isinstance(board, FerrersBoard):
        raise UsageError(f"the {config.model} model needs a Ferrers board")
    if config.model == "alpha" and (config.alpha is None or config.alpha < 0):
        raise UsageError("the alpha model needs --alpha >= 0")
    return board


def placements_for(config: CliConfig, board: Board, k: int) -> list:
    if config.model == "matching":
        return pl.matchings(board, k)
    if config.model == "alpha":
        return pl.file(board, k)
    return pl.nonattacking(board, k)


def rook_value(config: CliConfig, board: Board, k: int) -> RatExpr:
    if config.model == "matching":
        return rook_matching(board, k)
    if config.model == "alpha":
        return rook_alpha(board, k, config.alpha)
    return rook_standard(board, k)


def max_k(config: CliConfig, board: Board) -> int:
    """Largest k with at least one placement."""
    if config.model == "alpha":
        return sum(1 for h in board.heights if h)
    if config.model == "standard":
        placed = 0
        for h in board.heights:
            if h > placed:
                placed += 1
        return placed
    k = 0
    while pl.matchings(board, k + 1):
        k += 1
    return k


def compute_rows(config: CliConfig, board: Board, ks: Sequence[int]) -> List[Dict[str, Any]]:
    rows = []
    for k in ks:
        row = {"k": k, "value": str(rook_value(config, board, k))}
        if config.counts:
            row["placements"] = len(placements_for(config, board, k))
        rows.append(row)
    return rows


def render_rows(config: CliConfig, board: Board, rows: List[Dict[str, Any]], single: bool) -> str:
    if config.fmt == "json":
        payload = {"model": config.model, "board": board.spec(), "values": rows}
        if config.model == "alpha":
            payload["alpha"] = config.alpha
        return json.dumps(payload)
    if config.fmt == "latex":
        lines = [r"\begin{tabular}{r" + ("r" if config.counts else "") + "l}", r"\hline"]
        head = ["$k$"] + (["placements"] if config.counts else []) + ["value"]
        lines.append(" & ".join(head) + r" \\")
        lines.append(r"\hline")
        for row in rows:
            cells = [str(row["k"])]
            if config.counts:
                cells.append(str(row["placements"]))
            cells.append("$" + to_latex(parse_ratexpr(row["value"])) + "$")
            lines.append(" & ".join(cells) + r" \\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines)
    if single:
        row = rows[0]
        text = row["value"]
        if config.counts:
            text += f"\nplacements: {row['placements']}"
        return text
    out = []
    for row in rows:
        line = f"k={row['k']}: {row['value']}"
        if config.counts:
            line += f"  [{row['placements']} placements]"
        out.append(line)
    return "\n".join(out)


def cmd_compute(config: CliConfig, out: TextIO) -> int:
    board = resolve_board(config)
    if config.k is not None:
        if config.k < 0:
            raise UsageError(f"--k must be >= 0, got {config.k}")
        ks = [config.k]
    else:
        ks = list(range(max_k(config, board) + 1))
    rows = compute_rows(config, board, ks)
    print(render_rows(config, board, rows, config.k is not None), file=out)
    return 0


def cmd_table(config: CliConfig, out: TextIO) -> int:
    board = resolve_board(config)
    lo = 0 if config.k_min is None else config.k_min
    hi = max_k(config, board) if config.k_max is None else config.k_max
    if lo < 0 or hi < lo:
        raise UsageError(f"invalid k range {lo}..{hi}")
    rows = compute_rows(config, board, range(lo, hi + 1))
    print(render_rows(config, board, rows, False), file=out)
    return 0


# -- verify --------------------------------------------------------------


def _need(config: CliConfig, *names: str) -> Tuple[int, ...]:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(config, n) is None]
    if missing:
        raise UsageError(f"identity {config.identity} needs {', '.join(missing)}")
    return tuple(getattr(config, n) for n in names)


def _ferrers(config: CliConfig) -> FerrersBoard:
    board = resolve_board(CliConfig("compute", "standard", board=config.board, family=config.family))
    return board


def _shifted(config: CliConfig) -> ShiftedBoard:
    return resolve_board(CliConfig("compute", "matching", board=config.board, family=config.family))


IDENTITIES: Dict[str, Callable[[CliConfig], VerificationReport]] = {
    "product-standard": lambda c: ids.verify_product_standard(_ferrers(c)),
    "product-alpha": lambda c: ids.verify_product_alpha(_ferrers(c), *_need(c, "alpha")),
    "product-matching": lambda c: ids.verify_product_matching(_shifted(c)),
    "lah-product": lambda c: ids.verify_lah_product(*_need(c, "n", "r")),
    "qpfaff": lambda c: ids.verify_qpfaff(*_need(c, "n", "r")),
    "pfaff-standard": lambda c: ids.verify_pfaff_standard_form(*_need(c, "n", "r")),
    "jain": lambda c: ids.verify_jain(*_need(c, "n")),
    "whipple": lambda c: ids.verify_whipple_special(*_need(c, "n")),
    "matching-saalschutz": lambda c: ids.verify_matching_saalschutz(*_need(c, "n")),
    "reversal": lambda c: ids.verify_reversal(*_need(c, "n")),
    "binomial-recursions": lambda c: ids.verify_binomial_recursions(*_need(c, "max_n")),
}


def cmd_verify(config: CliConfig, out: TextIO) -> int:
    if config.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {config.identity!r}; choose from {', '.join(IDENTITIES)}")
    for name in ("n", "r", "alpha", "max_n"):
        value = getattr(config, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 0, got {value}")
    report = IDENTITIES[config.identity](config)
    print(json.dumps(report.to_json()), file=out)
    return 0 if report.holds else 1


# -- suite ---------------------------------------------------------------


def cmd_suite(config: CliConfig, out: TextIO) -> int:
    from aqrook.suite import SuiteBounds, run_suite

    bounds = SuiteBounds()
    if config.max_n is not None:
        if config.max_n < 1:
            raise UsageError(f"--max-n must be >= 1, got {config.max_n}")
        bounds = bounds.capped(config.max_n)
    results = run_suite(bounds, config.workers)
    if config.fmt == "json":
        payload = []
        for res in results:
            for rep in res.reports:
                payload.append({"criterion": res.number, **rep.to_json()})
        print(json.dumps(payload), file=out)
    else:
        for res in results:
            print(res.summary_line(), file=out)
            for rep in res.failures:
                print("    " + json.dumps(rep.to_json()), file=out)
        failed = [res.number for res in results if not res.passed]
        total = sum(res.elapsed for res in results)
        verdict = "all criteria passed" if not failed else f"failed criteria: {failed}"
        print(f"{verdict} ({total:.2f}s)", file=out)
    return 0 if all(res.passed for res in results) else 1


# -- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aqrook", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=FORMATS) -> None:
        p.add_argument("--format", dest="fmt", choices=formats, default="text")
        p.add_argument("--workers", type=int, default=None,
                       help=f"worker processes (default ${WORKERS_ENV} or 1)")

    def board_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--model", choices=MODELS, default="standard")
        p.add_argument("--board", help="comma-separated column heights, e.g. 0,1,2")
        p.add_argument("--family", help="rect:l,m | stair:n | lah:n,r | matchfull:n | shifted:n:a1,...")
        p.add_argument("--alpha", type=int)
        p.add_argument("--counts", action="store_true", help="also report placement counts")

    p = sub.add_parser("compute", help="one rook number, or all k")
    board_args(p)
    p.add_argument("--k", type=int)
    common(p)

    p = sub.add_parser("table", help="rook numbers over a range of k")
    board_args(p)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    common(p)

    p = sub.add_parser("verify", help="check one identity instance")
    p.add_argument("--identity", required=True, choices=sorted(IDENTITIES))
    p.add_argument("--board")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--max-n", type=int, help="n_max for binomial-recursions")
    common(p, ("json", "text"))

    p = sub.add_parser("suite", help="run the acceptance grid")
    p.add_argument("--max-n", type=int, help="cap every size bound")
    common(p, ("text", "json"))
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    values = {
        name: getattr(ns, name)
        for name in ("model", "identity", "board", "family", "k", "k_min", "k_max",
                     "n", "r", "alpha", "max_n")
        if getattr(ns, name, None) is not None
    }
    return CliConfig(
        command=ns.command,
        counts=getattr(ns, "counts", False),
        fmt=ns.fmt,
        workers=resolve_workers(ns.workers),
        **values,
    )


HANDLERS = {"compute": cmd_compute, "table": cmd_table, "verify": cmd_verify, "suite": cmd_suite}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = config_from_args(ns)
        return HANDLERS[config.command](config, out)
    except (AqrookError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 2


def run_captured(argv: Sequence[str]) -> Tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def cli_contract_reports() -> List[VerificationReport]:
    """Exit codes and JSON round trips of the CLI, run in-process.

    ``suite`` itself is left out here since this check runs inside it.
    """
    reports = []

    def report(name: str, params: Dict[str, Any], holds: bool, detail: str = "") -> None:
        witness = None if holds else {"case": name, "lhs": detail, "rhs": ""}
        reports.append(VerificationReport("cli-" + name, params, holds, witness, 0.0, 1))

    argv = ["verify", "--identity", "qpfaff", "--n", "2", "--r", "0"]
    code, _, err = run_captured(argv)
    report("degenerate-exit", {"argv": argv}, code == 2 and "DegenerateParameters" in err, err)

    argv = ["verify", "--identity", "qpfaff", "--n", "3", "--r", "1"]
    code, text, _ = run_captured(argv)
    try:
        rep = VerificationReport.from_json(json.loads(text))
        ok = code == 0 and rep.holds and rep.identity == "qpfaff"
    except (ValueError, KeyError):
        ok = False
    report("verify-json", {"argv": argv}, ok, text)

    argv = ["compute", "--model", "standard", "--family", "rect:2,2", "--format", "json", "--counts"]
    code, text, _ = run_captured(argv)
    try:
        data = json.loads(text)
        ok = code == 0
        for row in data["values"]:
            value = parse_ratexpr(row["value"])
            ok = ok and str(value) == row["value"] and value == rook_standard(parse_family("rect:2,2"), row["k"])
    except (ValueError, KeyError):
        ok = False
    report("compute-json-roundtrip", {"argv": argv}, ok, text)

    argv = ["compute", "--model", "standard", "--family", "rect:1,1", "--k", "0"]
    code, text, _ = run_captured(argv)
    report("compute-text", {"argv": argv}, code == 0 and text.strip() == "(1-b^2*s^2)/(s^2-b^2)", text)

    argv = ["compute", "--model", "standard", "--board", "2,1", "--k", "0"]
    code, _, err = run_captured(argv)
    report("bad-board-exit", {"argv": argv}, code == 2 and "NotNondecreasing" in err, err)
    return reports


if __name__ == "__main__":
    sys.exit(main())
