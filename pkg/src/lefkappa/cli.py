"""Command-line interface.

Exit status: 0 on success, 1 on usage or parse errors, 2 when any record or
property check fails (the report is still written in full).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dataset import parse_dataset
from .errors import LefkappaError
from .evaluate import (
    classify_records,
    convert_records,
    enumeration_rows,
    invariants_record,
    verify_dataset,
)
from .oracle import DEFAULT_LIMIT, enumerate_hyperelliptic
from .pencil import ConventionMode
from .report import emit_report

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

_MODES = {"euler": ConventionMode.EULER_CONSISTENT, "paper-literal": ConventionMode.PAPER_LITERAL}
_GLOBAL_DEFAULTS = {"format": "text", "mode": "euler", "output": None}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_globals(parser):
    # SUPPRESS lets the flags appear before or after the subcommand
    parser.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    parser.add_argument("--mode", choices=tuple(_MODES), default=argparse.SUPPRESS)
    parser.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lefkappa", description="Kodaira dimension of Lefschetz fibrations and pencils")
    _add_globals(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in (
        ("classify", "run every applicable classifier"),
        ("invariants", "chi, sigma, K^2 and chi_h only"),
        ("check", "classify and cross-check records sharing an id"),
        ("convert", "fibration <-> pencil conversions"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        _add_globals(p)
    p = sub.add_parser("enumerate", help="exhaustive hyperelliptic enumeration")
    p.add_argument("--g-min", type=int, required=True)
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    _add_globals(p)
    return parser


def _read(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse_dataset(text)


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    mode = _MODES[args.mode]

    if args.command == "enumerate":
        try:
            report = enumerate_hyperelliptic(
                args.g_min, args.g_max, args.n_max, workers=args.workers, limit=args.limit
            )
        except (LefkappaError, OverflowError) as exc:
            print(f"lefkappa: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _write(emit_report(enumeration_rows(report), args.format), args.output)
        for failure in report.failures:
            print(f"violation: {failure}", file=sys.stderr)
        return EXIT_VIOLATION if report.failures else EXIT_OK

    try:
        records, diagnostics = _read(args.file)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"lefkappa: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for diag in diagnostics:
        print(str(diag), file=sys.stderr)

    if args.command == "classify":
        rows = classify_records(records, mode)
    elif args.command == "invariants":
        rows = [invariants_record(r, mode) for r in records]
    elif args.command == "convert":
        rows = convert_records(records, mode)
    else:
        rows = verify_dataset(records, mode).rows

    _write(emit_report(rows, args.format), args.output)
    for row in rows:
        for err in row.errors:
            print(f"{row.kind} {row.inputs}: {err}", file=sys.stderr)
    if diagnostics:
        return EXIT_USAGE
    if any(row.errors for row in rows):
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
