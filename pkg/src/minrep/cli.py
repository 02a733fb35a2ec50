"""Command-line entry point: ``minrep verify`` and ``minrep table``."""
from __future__ import annotations

import argparse
import sys
import time

from .jordan import COLUMNS, classification_table
from .suites import SUITES, SuiteUnavailable, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minrep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES + ["all"])
    v.add_argument("--rank", type=int, default=1)
    v.add_argument("--max-degree", type=int, default=6)
    v.add_argument("--max-m", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--mc-samples", type=int, default=200_000)
    v.add_argument("--format", choices=["json", "markdown"], default="json")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")

    sub.add_parser("table", help="print the classification table")
    return parser


def _validate(parser, args):
    if args.rank < 1:
        parser.error("--rank must be at least 1")
    if args.max_degree < 2:
        parser.error("--max-degree must be at least 2")
    if args.max_m < 1:
        parser.error("--max-m must be at least 1")
    if args.mc_samples < 0:
        parser.error("--mc-samples must be non-negative")


def emit_table() -> str:
    rows = classification_table()
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in COLUMNS}
    out = ["  ".join(c.ljust(widths[c]) for c in COLUMNS)]
    out.append("  ".join("-" * widths[c] for c in COLUMNS))
    for r in rows:
        out.append("  ".join(str(r[c]).ljust(widths[c]) for c in COLUMNS))
    return "\n".join(line.rstrip() for line in out) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    if args.command == "table":
        sys.stdout.write(emit_table())
        return EXIT_PASS
    try:
        _validate(parser, args)
    except SystemExit:
        return EXIT_USAGE

    cfg = {"suite": args.suite, "rank": args.rank, "max_degree": args.max_degree, "max_m": args.max_m,
           "seed": args.seed, "mc_samples": args.mc_samples, "format": args.format}
    start = time.perf_counter()
    try:
        report = run_suite(args.suite, cfg)
    except SuiteUnavailable as exc:
        print(f"minrep: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.wall_time = time.perf_counter() - start

    text = report.to_json() if args.format == "json" else report.to_markdown()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
