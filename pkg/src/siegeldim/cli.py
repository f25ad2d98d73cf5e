"""Command line interface: ``siegeldim compute|table|verify|crosscheck``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid level,
64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .contributions import Weight
from .dimension import dim_cusp_forms
from .level import InvalidLevelError, make_level
from .numtheory import DomainError
from .render import FORMATS, compute_table, fraction_str, render
from .verification import crosscheck, odd_primes_upto, verify_golden

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_LEVEL = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text: str, step: int = 1) -> range:
    """Parse ``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1, step)


def j_range(text: str) -> range:
    """Like :func:`int_range` but stepping by 2 from the lower end."""
    return int_range(text, step=2)


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="siegeldim",
        description="Dimensions of Siegel cusp forms of degree two on Gamma(D1, D2).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="dimension for a single weight")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--k", type=nonneg_int, required=True)
    p.add_argument("--j", type=nonneg_int, required=True)
    p.add_argument("--breakdown", action="store_true", help="print all 15 terms")

    p = sub.add_parser("table", help="table over ranges of k and j")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--k", type=int_range, required=True, help="A..B inclusive")
    p.add_argument(
        "--j", type=j_range, required=True, help="A..B inclusive, step 2 from A"
    )
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--breakdown", action="store_true", help="include terms (json only)")

    sub.add_parser("verify", help="recompute the published tables")

    p = sub.add_parser("crosscheck", help="compare with the closed form on Gamma(1,2p)")
    p.add_argument("--pmax", type=int, default=97)
    p.add_argument("--kmax", type=nonneg_int, default=40)
    return parser


def _compute(args, out) -> int:
    level = make_level(args.d1, args.d2)
    res = dim_cusp_forms(Weight(args.k, args.j), level)
    print(f"{res.dimension} ({res.validity.label})", file=out)
    if args.breakdown:
        for name, v in res.breakdown.terms.items():
            print(f"{name:>4} = {fraction_str(v)}", file=out)
        print(f"{'sum':>4} = {fraction_str(res.breakdown.total)}", file=out)
    return EXIT_OK


def _table(args, out) -> int:
    level = make_level(args.d1, args.d2)
    table = compute_table(level, list(args.k), list(args.j))
    out.write(render(table, args.format, args.breakdown))
    return EXIT_OK


def _verify(args, out) -> int:
    report = verify_golden()
    for m in report.mismatches:
        print(m.describe(), file=out)
    good = report.checked - len(report.mismatches)
    print(f"{good}/{report.checked} cells match", file=out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _crosscheck(args, out) -> int:
    if not odd_primes_upto(args.pmax):
        raise UsageError(f"no odd primes <= {args.pmax}")
    report, values = crosscheck(args.pmax, args.kmax)
    for m in report.mismatches:
        print(m.describe(), file=out)
    for p, row in values.items():
        print(f"p={p}: " + " ".join(str(v) for v in row), file=out)
    good = report.checked - len(report.mismatches)
    print(
        f"{good}/{report.checked} agree "
        f"({len(values)} primes, k=0..{args.kmax})",
        file=out,
    )
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {
    "compute": _compute,
    "table": _table,
    "verify": _verify,
    "crosscheck": _crosscheck,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except InvalidLevelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_LEVEL
    except (UsageError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
