"""Command-line entry point.

Usage examples
--------------
  multitree count 5 1 2
  multitree table --max-n 6 --max-s 2 --max-m 2 --format json --out grid.json
  multitree verify --max-n 6 --max-s 2 --max-m 2
  multitree enumerate 3 1 0 --codes

Exit status: 0 success, 1 verification mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io as mio
from .core import serialize_code
from .dp import CountTable, count_rooted
from .oracle import Enumerator, enumerate_rooted


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--memo-file", metavar="F", help="load memo snapshot if present, save it afterwards")
    common.add_argument("--no-memo", action="store_true", help="disable the in-memory cache")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--max-n", type=_nonneg, required=True)
    grid.add_argument("--max-s", type=_nonneg, required=True)
    grid.add_argument("--max-m", type=_nonneg, required=True)

    triple = argparse.ArgumentParser(add_help=False)
    triple.add_argument("n", type=_nonneg)
    triple.add_argument("s", type=_nonneg)
    triple.add_argument("m", type=_nonneg)

    parser = argparse.ArgumentParser(
        prog="multitree",
        description="Count non-isomorphic rooted tree-like multigraphs by vertices, self-loops and extra edges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[triple, common], help="print p(n, s, m)")
    p = sub.add_parser("table", parents=[grid, common], help="emit a grid of counts")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="F", help="output file (default: stdout)")
    sub.add_parser("verify", parents=[grid, common], help="compare the DP against brute force")
    p = sub.add_parser("enumerate", parents=[triple, common], help="brute-force count (and list) structures")
    p.add_argument("--codes", action="store_true", help="print one canonical code per line")
    return parser


def _make_table(args) -> CountTable:
    table = CountTable(enabled=not args.no_memo)
    if args.memo_file and os.path.exists(args.memo_file):
        with open(args.memo_file, encoding="utf-8", newline="\n") as fh:
            mio.load_memo(fh, table)
    return table


def _save_table(args, table: CountTable):
    if args.memo_file:
        with open(args.memo_file, "w", encoding="utf-8", newline="\n") as fh:
            mio.save_memo(table, fh)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> int:
    if args.memo_file and args.no_memo:
        raise UsageError("--memo-file cannot be combined with --no-memo")
    if args.command in ("count", "enumerate") and args.n < 1:
        raise UsageError("n must be at least 1")
    if args.command in ("table", "verify") and args.max_n < 1:
        raise UsageError("--max-n must be at least 1")

    if args.command == "enumerate":
        result = enumerate_rooted(args.n, args.s, args.m)
        lines = [str(result.count)]
        if args.codes:
            lines += [serialize_code(t) for t in result.codes]
        sys.stdout.write("\n".join(lines) + "\n")
        return 0

    table = _make_table(args)

    def dp_count(n, s, m):
        return count_rooted(n, s, m, table)

    status = 0
    if args.command == "count":
        sys.stdout.write(f"{dp_count(args.n, args.s, args.m)}\n")
    elif args.command == "table":
        grid = mio.build_grid(args.max_n, args.max_s, args.max_m, dp_count)
        text = mio.emit_csv(grid) if args.format == "csv" else mio.emit_json(grid)
        _write(text, args.out)
    elif args.command == "verify":
        enumerator = Enumerator()
        grid = mio.CountGrid(args.max_n, args.max_s, args.max_m)
        mismatches = []
        for n, s, m in grid.keys():
            got, want = dp_count(n, s, m), len(enumerator.trees(n, s, m))
            if got != want:
                mismatches.append(f"{n},{s},{m},{got},{want}")
        if mismatches:
            sys.stdout.write("\n".join(["n,s,m,dp,oracle", *mismatches]) + "\n")
            print(f"{len(mismatches)} of {grid.size} cells disagree", file=sys.stderr)
            status = 1
        else:
            sys.stdout.write(f"OK {grid.size} cells\n")
    _save_table(args, table)
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (UsageError, ValueError) as exc:
        print(f"multitree: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
