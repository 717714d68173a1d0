"""Command line front end: run one verification suite, print a report.

Exit status is 0 only when every leaf of the chosen suite passed; an
unknown suite name exits 2 before any check runs.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .errors import UnknownSuite
from .report import emit_json, emit_markdown
from .suites import SUITE_NAMES, SuiteConfig, run_suite


def _precision(text: str) -> Fraction:
    try:
        value = Fraction(Decimal(text))
    except (InvalidOperation, ValueError, ZeroDivisionError) as ex:
        raise argparse.ArgumentTypeError(
            f"not a decimal precision: {text!r}") from ex
    if value <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="verify",
        description="run a named verification suite over the bundled "
                    "surface data and print the report")
    ap.add_argument("suite", metavar="SUITE",
                    help=f"one of: {', '.join(SUITE_NAMES)}")
    ap.add_argument("--data", metavar="DIR", default=None,
                    help="directory holding the model data files "
                         "(default: the bundled data)")
    ap.add_argument("--format", choices=("json", "md"), default="md",
                    help="report format (default: md)")
    ap.add_argument("--precision", metavar="P", type=_precision,
                    default=Fraction(1, 10 ** 9),
                    help="interval width for real-root isolation "
                         "(default: 1e-9)")
    ap.add_argument("--ext-bound", metavar="N", type=int, default=10,
                    help="largest field-extension degree searched when "
                         "locating singular points (default: 10)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = SuiteConfig(data_dir=args.data, precision=args.precision,
                         ext_bound=args.ext_bound)
    try:
        report = run_suite(args.suite, config)
    except UnknownSuite as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    text = emit_json(report) if args.format == "json" \
        else emit_markdown(report)
    sys.stdout.write(text)
    return 0 if report.ok() else 1


if __name__ == "__main__":
    raise SystemExit(main())
