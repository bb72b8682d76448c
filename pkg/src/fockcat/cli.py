"""Command-line front end: ``fockcat <subcommand> ...``.

Exit status is 0 on success, 1 when a verification or a cross-method
comparison fails, and 2 on a usage error (bad flags, unparsable input).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from fractions import Fraction

from . import heisenberg as H
from . import macmahon as M
from .expr import ParseError, parse_expression
from .fock import FockVector, gamma_minus, gamma_plus
from .partitions import format_partition, parse_partition
from .planepart import (
    MAX_EXHAUSTIVE_VOLUME,
    count_plane_partitions,
    diagonal_slices,
    enumerate_plane_partitions,
)
from .series import specialize_t
from .symgrp import ClassFunction, ch, character_table
from .verify import SUITES, Budget, run_verify

__all__ = ["main", "build_parser", "parse_expression", "UsageError"]


class UsageError(Exception):
    pass


FAMILIES = {
    "classical": M.METHODS,
    "deformed": M.DEFORMED_METHODS,
    "refined": M.REFINED_METHODS,
}


# -- output helpers ------------------------------------------------------------


def _emit(fmt: str, payload, rows, plain: str, out):
    """Write ``payload`` (json), ``rows`` (csv, first row is the header) or ``plain``."""
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(plain.rstrip("\n") + "\n")


def _expr_terms(expr: H.HExpr) -> list:
    return [
        {"word": "*".join(str(g) for g in w) or "1", "coeff": c.to_json()}
        for w, c in expr.items()
    ]


def _parse(text: str) -> H.HExpr:
    try:
        return parse_expression(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _partition(text: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


_Z_RE = re.compile(r"^\s*q?\s*\^?\s*\(?\s*(\d+)(?:\s*/\s*(\d+))?\s*\)?\s*$")


def parse_z(text: str) -> int:
    """``"q1/2"`` -> 1, ``"q"`` -> 2, ``"q3/2"`` -> 3, ``"1"`` -> 0 (units of ``q^(1/2)``)."""
    text = text.strip().lower()
    if text == "1":
        return 0
    if text == "q":
        return 2
    m = _Z_RE.match(text)
    if not m or not text.startswith("q"):
        raise UsageError(f"cannot read z = {text!r}; expected something like q1/2, q, q3/2")
    k = Fraction(int(m.group(1)), int(m.group(2) or 1)) * 2
    if k.denominator != 1:
        raise UsageError(f"z = {text!r} is not a power of q^(1/2)")
    return int(k)


# -- subcommands ---------------------------------------------------------------


def cmd_normal_order(args, out) -> int:
    expr = _parse(args.expression)
    rng = random.Random(args.seed) if args.strategy == "random" else None
    result = H.normal_order(expr, rng=rng, strategy=args.strategy)
    payload = {"input": args.expression, "normal_form": str(result), "terms": _expr_terms(result)}
    rows = [["word", "coeff"]] + [
        ["*".join(str(g) for g in w) or "1", c.compact()] for w, c in result.items()
    ]
    _emit(args.format, payload, rows, str(result), out)
    return 0


def cmd_vacuum(args, out) -> int:
    value = H.vacuum_expectation(_parse(args.expression))
    payload = {"input": args.expression, "value": str(value), "coeff": value.to_json()}
    _emit(args.format, payload, [["input", "value"], [args.expression, value.compact()]], str(value), out)
    return 0


def _series_rows(results: dict, N: int) -> list:
    names = list(results)
    rows = [["n"] + names]
    for n in range(N + 1):
        rows.append([n] + [results[k].coeff_q(n).compact() for k in names])
    return rows


def cmd_zseries(args, out) -> int:
    if args.deformed and args.refined:
        raise UsageError("--deformed and --refined are exclusive")
    family = "deformed" if args.deformed else "refined" if args.refined else "classical"
    table = FAMILIES[family]
    N = args.max_q
    if N < 0:
        raise UsageError("--max-q must be non-negative")
    methods = list(table) if args.method == "all" else [args.method]
    if methods[0] not in table:
        raise UsageError(f"method {args.method!r} is not available for {family}; choose from {', '.join(table)}")
    if N > MAX_EXHAUSTIVE_VOLUME and any(m in ("enumeration", "pairs") for m in methods):
        if args.method != "all":
            raise UsageError(f"{args.method} is limited to --max-q <= {MAX_EXHAUSTIVE_VOLUME}")
        methods = [m for m in methods if m not in ("enumeration", "pairs")]
    report = M.compare_methods(N, family, methods)
    if args.t is not None:
        if family == "classical":
            raise UsageError("--t only applies to --deformed or --refined")
        try:
            value = Fraction(args.t)
        except ValueError:
            raise UsageError(f"--t expects a rational number, got {args.t!r}") from None
        try:
            report.results = {k: specialize_t(v, value) for k, v in report.results.items()}
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot set t = {args.t}: {exc}") from None
    payload = report.to_json()
    mismatch = report.first_mismatch()
    payload["first_mismatch"] = (
        None
        if mismatch is None
        else {"methods": list(mismatch[:2]), "q_power": mismatch[2], "values": [str(mismatch[3]), str(mismatch[4])]}
    )
    if args.t is not None:
        payload["t"] = args.t
    lines = [f"{name}: {series}" for name, series in report.results.items()]
    if len(methods) > 1:
        if mismatch is None:
            lines.append(f"agree: yes ({', '.join(methods)})")
        else:
            a, b, n, x, y = mismatch
            lines.append(f"agree: NO, first difference at q^{n}: {a} gives {x}, {b} gives {y}")
    _emit(args.format, payload, _series_rows(report.results, N), "\n".join(lines), out)
    return 0 if report.agree else 1


def cmd_plane_partitions(args, out) -> int:
    v = args.volume
    if v < 0:
        raise UsageError("--volume must be non-negative")
    if v > MAX_EXHAUSTIVE_VOLUME:
        raise UsageError(f"enumeration is limited to volume <= {MAX_EXHAUSTIVE_VOLUME}")
    mode = "slices" if args.slices else "list" if args.list else "count"
    if mode == "count":
        n = count_plane_partitions(v)
        _emit(args.format, {"volume": v, "count": n}, [["volume", "count"], [v, n]], str(n), out)
        return 0
    pps = enumerate_plane_partitions(v)
    if mode == "list":
        payload = {"volume": v, "plane_partitions": [pi.as_lists() for pi in pps]}
        rows = [["plane_partition"]] + [[str(pi)] for pi in pps]
        _emit(args.format, payload, rows, "\n".join(map(str, pps)), out)
        return 0
    entries, rows, lines = [], [["plane_partition", "m", "slice"]], []
    for pi in pps:
        sl = diagonal_slices(pi)
        entries.append({"plane_partition": pi.as_lists(), "slices": {str(m): list(lam) for m, lam in sl.items()}})
        rows += [[str(pi), m, format_partition(lam)] for m, lam in sl.items()]
        lines.append(f"{pi}  " + " ".join(f"{m}:{format_partition(lam)}" for m, lam in sl.items()))
    _emit(args.format, {"volume": v, "slices": entries}, rows, "\n".join(lines), out)
    return 0


def cmd_gamma(args, out) -> int:
    z = parse_z(args.z)
    lam = _partition(args.state)
    if args.cutoff < sum(lam):
        raise UsageError("--cutoff is below the weight of --state")
    # exact for every reachable partition unless --max-q asks for less
    order = z * max(args.cutoff, sum(lam)) + 1 if args.max_q is None else 2 * args.max_q + 2
    state = FockVector.basis(lam, args.cutoff, order)
    result = (gamma_minus if args.side == "minus" else gamma_plus)(state, z)
    payload = {
        "side": args.side,
        "z_unit": z,
        "state": list(lam),
        "cutoff": args.cutoff,
        "order": order,
        "result": {format_partition(mu): c.to_json() for mu, c in result.items()},
    }
    rows = [["partition", "coefficient"]] + [[format_partition(mu), str(c)] for mu, c in result.items()]
    _emit(args.format, payload, rows, str(result), out)
    return 0


def cmd_character_table(args, out) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    rows_, cols, table = character_table(args.n)
    payload = {
        "n": args.n,
        "rows": [list(r) for r in rows_],
        "columns": [list(c) for c in cols],
        "table": table,
    }
    csv_rows = [["lambda"] + [format_partition(c) for c in cols]]
    csv_rows += [[format_partition(r)] + list(vals) for r, vals in zip(rows_, table)]
    width = max(len(str(x)) for line in csv_rows for x in line)
    plain = "\n".join(" ".join(str(x).rjust(width) for x in line) for line in csv_rows)
    _emit(args.format, payload, csv_rows, plain, out)
    return 0


def cmd_ch(args, out) -> int:
    lam = _partition(args.partition)
    if sum(lam) != args.n:
        raise UsageError(f"{format_partition(lam)} is not a partition of {args.n}")
    result = ch(ClassFunction.irreducible(lam))
    payload = {
        "n": args.n,
        "lambda": list(lam),
        "ch": str(result),
        "terms": [{"modes": list(mu), "coeff": c.to_json()} for mu, c in result.items()],
    }
    rows = [["modes", "coeff"]] + [[format_partition(mu), c.compact()] for mu, c in result.items()]
    _emit(args.format, payload, rows, str(result), out)
    return 0


def cmd_verify(args, out) -> int:
    budget = Budget(seed=args.seed)
    if args.max_q is not None:
        budget.max_q = args.max_q
        budget.max_q_deformed = min(args.max_q, MAX_EXHAUSTIVE_VOLUME)
    if args.words is not None:
        budget.n_words = args.words
    try:
        report = run_verify(args.suite, budget)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rows = [["suite", "check", "passed", "counterexample"]]
    lines = []
    for suite, checks in report["suites"].items():
        for c in checks:
            rows.append([suite, c["name"], c["passed"], c["counterexample"] or ""])
            line = f"{'PASS' if c['passed'] else 'FAIL'}  {suite}: {c['name']}"
            if c["counterexample"]:
                line += f"  [{c['counterexample']}]"
            lines.append(line)
    lines.append("all checks passed" if report["passed"] else "SOME CHECKS FAILED")
    _emit(args.format, report, rows, "\n".join(lines), out)
    return 0 if report["passed"] else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--max-q", type=int, default=argparse.SUPPRESS, metavar="N")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="fockcat",
        description="Exact computations in the deformed Heisenberg algebra and MacMahon functions.",
    )
    parser.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    parser.add_argument("--max-q", type=int, default=None, metavar="N", help="highest power of q kept")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized choices")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("normal-order", parents=[common], help="normal-order an expression")
    sp.add_argument("expression")
    sp.add_argument("--strategy", choices=["product", "leftmost", "random"], default="product")
    sp.set_defaults(func=cmd_normal_order)

    sp = sub.add_parser("vacuum", parents=[common], help="vacuum expectation <vac|expr|vac>")
    sp.add_argument("expression")
    sp.set_defaults(func=cmd_vacuum)

    sp = sub.add_parser("zseries", parents=[common], help="MacMahon series by several methods")
    sp.add_argument(
        "--method",
        choices=["product", "transfer", "enumeration", "commutation", "pairs", "all"],
        default="all",
    )
    sp.add_argument("--deformed", action="store_true", help="Z(q,t) instead of Z(q)")
    sp.add_argument("--refined", action="store_true", help="the t^(+-1/2) variant")
    sp.add_argument("--t", default=None, metavar="VALUE", help="specialize t to a rational value")
    sp.set_defaults(func=cmd_zseries)

    sp = sub.add_parser("plane-partitions", parents=[common], help="count, list or slice plane partitions")
    sp.add_argument("--volume", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--slices", action="store_true")
    sp.set_defaults(func=cmd_plane_partitions)

    sp = sub.add_parser("gamma", parents=[common], help="apply Gamma_-(z) or Gamma_+(z) to a basis state")
    sp.add_argument("--side", choices=["minus", "plus"], required=True)
    sp.add_argument("--z", default="q1/2", help="z as a power of q, e.g. q1/2 or q3/2")
    sp.add_argument("--state", default="()", help='partition such as "(2,1)"')
    sp.add_argument("--cutoff", type=int, default=4, help="largest partition weight kept")
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("character-table", parents=[common], help="character table of S_n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_character_table)

    sp = sub.add_parser("ch", parents=[common], help="characteristic map of an irreducible character")
    sp.add_argument("n", type=int)
    sp.add_argument("partition", metavar="lambda")
    sp.set_defaults(func=cmd_ch)

    sp = sub.add_parser("verify", parents=[common], help="run invariant suites")
    sp.add_argument("suite", nargs="?", default="all", help=f"one of: all, {', '.join(SUITES)}")
    sp.add_argument("--words", type=int, default=None, help="random words for the rewrite checks")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "zseries" and args.max_q is None:
        args.max_q = 6
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"fockcat {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
