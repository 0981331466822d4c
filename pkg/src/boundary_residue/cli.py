"""Command-line entry point: ``boundary-residue compute`` and ``verify``.

Exit codes: 0 on success (disagreements with the published values are
flagged inside the report), 1 on usage or input errors, 2 when an internal
invariant fails.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .audit import HEADER, build_report
from .cases import CaseEngine, enumerate_cases
from .constants import ConstantsError, load_constants
from .report import AuditReport

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boundary-residue", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    comp = sub.add_parser("compute", help="evaluate boundary cases and compare with the published values")
    which = comp.add_mutually_exclusive_group()
    which.add_argument("--case", type=int, metavar="N", help="a single case, 1..15")
    which.add_argument("--all", action="store_true", help="all fifteen cases plus totals (default)")
    comp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    comp.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    comp.add_argument("--constants", metavar="PATH", help="imported constants file (default: bundled table)")

    ver = sub.add_parser("verify", help="run the invariant suite against the independent oracles")
    ver.add_argument("--oracle-trials", type=int, default=200, metavar="N")
    ver.add_argument("--seed", type=int, default=0, metavar="S")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--out", metavar="PATH")
    ver.add_argument("--constants", metavar="PATH")
    return parser


def _constants(path: str | None):
    return None if path is None else load_constants(path)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render(report: AuditReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "latex":
        return report.to_latex()
    return report.to_text()


def cmd_compute(args) -> int:
    known = {c.number for c in enumerate_cases()}
    if args.case is not None and args.case not in known:
        raise UsageError(f"unknown case {args.case}; cases are 1..{max(known)}")
    engine = CaseEngine(constants=_constants(args.constants))
    report = build_report(engine, [args.case] if args.case is not None else None)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if report.invariants_ok else EXIT_INVARIANT


def cmd_verify(args) -> int:
    from .verification import run_suite

    if args.oracle_trials < 1:
        raise UsageError("--oracle-trials must be positive")
    invariants, comparisons = run_suite(args.oracle_trials, args.seed, _constants(args.constants))
    report = AuditReport(
        header=list(HEADER),
        comparisons=comparisons,
        invariants=invariants,
        environment={"seed": args.seed, "oracle_trials": args.oracle_trials, "version": __version__},
    )
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if report.invariants_ok else EXIT_INVARIANT


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return {"compute": cmd_compute, "verify": cmd_verify}[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        print(parser.format_usage(), end="", file=sys.stderr)
        return EXIT_USAGE
    except ConstantsError as exc:
        print(f"constants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
