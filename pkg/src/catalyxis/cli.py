"""Command-line front end.

Exit codes: 0 success, 2 bad input or I/O failure, 3 operation does not
apply to the pair (e.g. bounds for a comparable pair), 4 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import reports
from .errors import NotIncomparable, ResourceLimit
from .majorization import majorizes
from .metrics import DEFAULT_SAMPLES, curve
from .search import (
    DEFAULT_PRECISION,
    DEFAULT_RESOLUTION,
    default_limit,
    grid_search,
    scan_qubit_regions,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INAPPLICABLE = 3
EXIT_RESOURCE = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_problem(args) -> reports.ProblemFile:
    if args.problem is not None and (args.p or args.q):
        raise CliError("give either a problem file or --p/--q, not both", EXIT_INPUT)
    try:
        if args.problem is not None:
            return reports.ProblemFile.load(args.problem)
        if not (args.p and args.q):
            raise CliError("need a problem file or both --p and --q", EXIT_INPUT)
        split = lambda s: tuple(x.strip() for x in s.split(",") if x.strip())
        return reports.ProblemFile(split(args.p), split(args.q), split(args.r) if args.r else None)
    except OSError as exc:
        raise CliError(f"cannot read problem: {exc}", EXIT_INPUT) from exc
    except ValueError as exc:
        raise CliError(f"invalid problem: {exc}", EXIT_INPUT) from exc


def _vectors(args):
    problem = _load_problem(args)
    try:
        return problem.vectors()
    except ValueError as exc:
        raise CliError(f"invalid problem: {exc}", EXIT_INPUT) from exc


def _require_incomparable(p, q):
    if majorizes(q, p):
        raise CliError("p is already majorized by q; catalyst bounds do not apply", EXIT_INAPPLICABLE)


def _emit(text: str, out):
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_INPUT) from exc


def cmd_check(args) -> int:
    p, q, _ = _vectors(args)
    _emit(reports.dumps(reports.check_document(p, q)), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    p, q, r = _vectors(args)
    _require_incomparable(p, q)
    try:
        rep = reports.bounds_report(p, q, r)
    except NotIncomparable as exc:
        raise CliError(str(exc), EXIT_INAPPLICABLE) from exc
    _emit(reports.dumps(rep.to_dict()), args.out)
    return EXIT_OK


def cmd_curve(args) -> int:
    p, q, _ = _vectors(args)
    if args.samples < 2:
        raise CliError("--samples must be at least 2", EXIT_INPUT)
    _emit(reports.curve_csv(curve(p, q, args.samples)), args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    p, q, _ = _vectors(args)
    _require_incomparable(p, q)
    try:
        precision = Fraction(args.precision)
    except ValueError as exc:
        raise CliError(f"bad --precision: {exc}", EXIT_INPUT) from exc
    if args.resolution < 10 or precision <= 0:
        raise CliError("--resolution must be >= 10 and --precision positive", EXIT_INPUT)
    report = scan_qubit_regions(p, q, args.resolution, precision)
    _emit(reports.dumps(reports.region_document(report, p, q)), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    p, q, _ = _vectors(args)
    if args.k < 1 or args.resolution < args.k:
        raise CliError("need --k >= 1 and --resolution >= --k", EXIT_INPUT)
    limit = args.limit if args.limit is not None else default_limit()
    try:
        result = grid_search(p, q, args.k, args.resolution, limit=limit)
    except ResourceLimit as exc:
        raise CliError(str(exc), EXIT_RESOURCE) from exc
    _emit(reports.dumps(reports.search_document(result, p, q, limit)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalyxis",
        description="Majorization and entanglement-catalysis toolkit for Schmidt vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("problem", nargs="?", help="JSON or CSV problem file")
        sp.add_argument("--p", help="initial vector, comma separated decimals")
        sp.add_argument("--q", help="target vector, comma separated decimals")
        sp.add_argument("--r", help="optional catalyst vector")
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "majorization order, violation set, distance and P_max")
    add("bounds", cmd_bounds, "closed-form catalyst bounds report")
    sp = add("curve", cmd_curve, "CSV of P_max(t) and distance(t) for r = (1-t, t)")
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp = add("scan", cmd_scan, "regions of qubit catalysis")
    sp.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    sp.add_argument("--precision", default=str(DEFAULT_PRECISION))
    sp = add("search", cmd_search, "exhaustive grid search for k-dimensional catalysts")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--resolution", type=int, default=30)
    sp.add_argument("--limit", type=int, default=None,
                    help="candidate ceiling (default $CATALYXIS_LIMIT or 1e8)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"catalyxis {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
