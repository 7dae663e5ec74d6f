"""Command line interface.

Exit codes: 0 success (including reports that show the closed form
disagreeing with data), 1 usage error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from . import reports
from .census import (
    VERDICT_INCONCLUSIVE,
    VERDICT_MATCH,
    VERDICT_MISMATCH,
    CensusRangeError,
    census,
    class_number_dirichlet,
    class_number_forms,
    default_workers,
    verify_watkins,
)
from .numtheory import is_fundamental
from .paperlab import compare, predicted_counts, predicted_expansion, selftest
from .series import DEFAULT_ORDER
from .watkins import WatkinsDataError, WatkinsRow, load_watkins

DEFAULT_REPORT_BOUND = 170000

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _workers(args) -> int:
    if args.workers is not None:
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        return args.workers
    try:
        return default_workers()
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_classnum(args) -> int:
    D = args.disc
    if not is_fundamental(D):
        raise UsageError(f"{D} is not a fundamental discriminant")
    h = class_number_forms(D)
    if args.oracle:
        h2 = class_number_dirichlet(D)
        print(f"h({D}) = {h}  (reduced forms: {h}, class number formula: {h2})")
        if h != h2:
            raise InvariantViolation(f"reduced forms and class number formula disagree for D={D}")
    else:
        print(f"h({D}) = {h}")
    return EXIT_OK


def _census(args):
    try:
        return census(args.bound, _workers(args))
    except CensusRangeError as e:
        raise UsageError(str(e)) from None


def cmd_census(args) -> int:
    t = _census(args)
    text = reports.census_to_json(t) if args.format == "json" else reports.census_to_csv(t)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify_census(args) -> int:
    t = _census(args)
    results = verify_watkins(t, load_watkins())
    for h, expected, actual, verdict in results:
        print(f"h={h} expected={expected} actual={actual} {verdict}")
    n = {v: sum(1 for r in results if r[3] == v) for v in (VERDICT_MATCH, VERDICT_MISMATCH, VERDICT_INCONCLUSIVE)}
    print(
        f"bound={args.bound}: {n[VERDICT_MATCH]} match, {n[VERDICT_MISMATCH]} mismatch, "
        f"{n[VERDICT_INCONCLUSIVE]} inconclusive"
    )
    if n[VERDICT_MISMATCH]:
        # the table is trusted ground truth, so a mismatch is a census bug
        raise InvariantViolation("census disagrees with the reference table")
    return EXIT_OK


def cmd_expand(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    f = predicted_expansion(args.order)
    if args.format == "csv":
        sys.stdout.write(reports.series_to_csv(f))
    else:
        print(", ".join(str(c) for c in f.coeffs))
    return EXIT_OK


def cmd_counts(args) -> int:
    if args.hmax < 1:
        raise UsageError("--hmax must be >= 1")
    K = predicted_counts(args.hmax)
    if args.format == "csv":
        sys.stdout.write(reports.sequence_to_csv(K))
    else:
        for h, k in enumerate(K, 1):
            print(f"K_{h} = {k}")
    return EXIT_OK


def cmd_report(args) -> int:
    reference = load_watkins()
    if args.watkins:
        rep = compare(reference, args.hmax)
        rep.meta = {"source": "watkins", "bound": None, "order": DEFAULT_ORDER, "hmax": args.hmax}
    else:
        args.bound = args.bound or DEFAULT_REPORT_BOUND
        t = _census(args)
        rows = [WatkinsRow(h, t.count(h), t.rows[h].max_abs_disc) for h in sorted(t.complete_through)]
        rep = compare(t, args.hmax, reference=rows)
        rep.meta = {"source": "census", "bound": args.bound, "order": DEFAULT_ORDER, "hmax": args.hmax}
    text = reports.report_to_json(rep) if args.format == "json" else reports.report_to_csv(rep)
    _emit(text, args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = selftest()
    for r in results:
        print(f"identity {r.name}: {'pass' if r.ok else 'FAIL'} ({r.detail})")
    if not all(r.ok for r in results):
        raise InvariantViolation("selftest failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="classzeta", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classnum", help="class number of one discriminant")
    s.add_argument("--disc", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="also run the class number formula")
    s.set_defaults(func=cmd_classnum)

    def add_census_args(s, required=True):
        s.add_argument("--bound", type=int, required=required)
        s.add_argument("--workers", type=int, default=None)

    s = sub.add_parser("census", help="class numbers of all fundamental |D| <= bound")
    add_census_args(s)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify-census", help="compare a census against the reference table")
    add_census_args(s)
    s.set_defaults(func=cmd_verify_census)

    s = sub.add_parser("expand", help="coefficients of the closed-form zeta function")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("counts", help="predicted number of fields per class number")
    s.add_argument("--hmax", type=int, required=True)
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("report", help="predicted versus empirical counts")
    src = s.add_mutually_exclusive_group()
    src.add_argument("--bound", type=int, default=None)
    src.add_argument("--watkins", action="store_true")
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--hmax", type=int, default=100)
    s.add_argument("--format", choices=("csv", "json"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("selftest", help="check the closed form's internal identities")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, WatkinsDataError, ArithmeticError) as e:
        print(f"classzeta: internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
