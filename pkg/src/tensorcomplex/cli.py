"""Command-line runner for the verification suites.

Exit codes: 0 all cases pass, 1 any case fails or errors, 2 bad usage/config.
The default seed comes from TENSORCOMPLEX_SEED when set.
"""

from __future__ import annotations

import argparse
import os
import sys

from .diagram import build_diagram
from .suites import SUITE_NAMES, SuiteConfig, run_suite


def _default_seed() -> int:
    raw = os.environ.get("TENSORCOMPLEX_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tensorcomplex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a verification suite")
    run.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    run.add_argument("--seed", type=int, default=None, help="64-bit seed (default: TENSORCOMPLEX_SEED or 0)")
    run.add_argument("--degree", type=int, default=3)
    run.add_argument("--samples", type=int, default=10)
    run.add_argument("--format", default="json", choices=["json", "markdown"])
    run.add_argument("--strict-preconditions", action="store_true")
    run.add_argument("--timings", action="store_true", help="include per-case timings (breaks byte-determinism)")
    run.add_argument("--out", default=None, help="write the report to this path instead of stdout")

    dump = sub.add_parser("dump-diagram", help="emit the space/operator diagram")
    dump.add_argument("--flavor", default="with-bc", choices=["with-bc", "no-bc"])
    dump.add_argument("--format", default="json", choices=["json", "markdown"])
    dump.add_argument("--out", default=None)
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "dump-diagram":
        g = build_diagram(args.flavor)
        if args.format == "json":
            import json

            _emit(json.dumps(g.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
        else:
            _emit(g.to_markdown() + "\n", args.out)
        return 0

    if args.degree < 0 or args.samples < 1:
        parser.error("degree must be >= 0 and samples >= 1")
    cfg = SuiteConfig(
        suite=args.suite,
        seed=args.seed if args.seed is not None else _default_seed(),
        degree=args.degree,
        samples=args.samples,
        format=args.format,
        strict_preconditions=args.strict_preconditions,
        timings=args.timings,
    )
    try:
        report = run_suite(cfg)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(report.to_json() if cfg.format == "json" else report.to_markdown(), args.out)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
