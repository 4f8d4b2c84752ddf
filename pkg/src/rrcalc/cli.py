"""Command line: ``rrcalc catalog | series | push``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import CATALOG, catalog_names, run_catalog
from .fgl import fgl_additive, fgl_inverse, fgl_multiplicative
from .gysin import (
    THEORY_BUILDERS,
    get_theory,
    k_class,
    lci_map,
    line_c1,
)
from .oracles import chow_pushforward_oracle, euler_char_oracle
from .report import ReportDocument, element_str
from .series import todd_series

DEFAULT_PRECISION = 12
MIN_PRECISION = 2


class UsageError(Exception):
    pass


def _fmt(q: Fraction) -> str:
    return str(Fraction(q))


def _human(text: str) -> str:
    """``"6/1"`` reads as ``6``; ring elements pass through."""
    try:
        return _fmt(Fraction(text))
    except ValueError:
        return text


# -- catalog -----------------------------------------------------------------------

def cmd_catalog(args) -> int:
    names = args.case if args.case else catalog_names()
    unknown = [n for n in names if n not in CATALOG]
    if unknown:
        raise UsageError(f"unknown catalog case(s): {', '.join(unknown)}")
    too_big = [n for n in names if CATALOG[n].required_precision > args.precision]
    if too_big:
        raise UsageError(f"precision {args.precision} is below the top weight needed by "
                         f"{', '.join(sorted(too_big))}")
    reports = run_catalog(names, args.precision)
    doc = ReportDocument.from_reports(reports, args.precision, timings=args.timings)
    width = max((len(c.name) for c in doc.cases), default=4)
    for c in doc.cases:
        oracle = "-" if c.oracle is None else _human(c.oracle)
        status = "PASS" if c.passed else "FAIL"
        print(f"{c.name:<{width}}  {c.theoryPair:<24}  lhs={_human(c.lhs)}  rhs={_human(c.rhs)}  "
              f"oracle={oracle}  {status}")
    s = doc.summary
    print(f"passed {s['passed']}/{s['total']}, failed {s['failed']}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(doc.dumps())
    return 0 if s["failed"] == 0 else 1


# -- series --------------------------------------------------------------------------

def cmd_series(args) -> int:
    if args.todd is not None:
        if args.inverse:
            raise UsageError("--inverse applies to --fgl only")
        if args.todd < 0:
            raise UsageError("--todd needs a non-negative degree")
        for c in todd_series(args.todd).coefficients():
            print(_fmt(c))
        return 0
    if args.fgl is None:
        raise UsageError("series needs --todd N or --fgl NAME")
    F = (fgl_additive if args.fgl == "additive" else fgl_multiplicative)(args.precision)
    if args.inverse:
        for c in fgl_inverse(F).coefficients():
            print(_fmt(c))
    else:
        for (i, j), c in F.series.items():
            print(f"x^{i} y^{j}: {_fmt(c)}")
    return 0


# -- push ------------------------------------------------------------------------------

_CLASS_RE = re.compile(r"^(?:(?P<one>1)|(?P<gen>[xh])(?:\^(?P<exp>\d+))?|O\((?P<twist>-?\d+)\))$")


def parse_space(text: str) -> int:
    m = re.fullmatch(r"P(\d+)", text)
    if not m:
        raise UsageError(f"space must look like Pn, got {text!r}")
    return int(m.group(1))


def push_value(theory_name: str, n: int, klass: str, precision: int):
    """Pushforward of a class along ``P^n -> pt`` and its oracle value (or None)."""
    m = _CLASS_RE.match(klass.replace(" ", ""))
    if not m:
        raise UsageError(f"class must be 1, x^k, h^k or O(d); got {klass!r}")
    theory = get_theory(theory_name, precision)
    f = lci_map(("proj", n), theory)
    R = f.source_ring
    oracle: Optional[Fraction] = None
    if m.group("one"):
        a = R.one()
        if theory_name == "additive":
            oracle = chow_pushforward_oracle(n, 0)
        elif theory_name == "K":
            oracle = euler_char_oracle(n, 0)
    elif m.group("gen"):
        k = int(m.group("exp") or 1)
        if k > n:
            raise UsageError(f"exponent {k} exceeds the dimension {n}")
        base = R.gen(0) if m.group("gen") == "x" else line_c1(R, (1,))
        a = base ** k
        if theory_name == "additive":
            sign = (-1) ** k if m.group("gen") == "x" else 1
            oracle = chow_pushforward_oracle(n, k) * sign
    else:
        d = int(m.group("twist"))
        if theory.line_class is None:
            raise UsageError(f"O(d) classes need a K-type theory, not {theory_name}")
        a = k_class(R, (d,))
        if theory_name == "K":
            oracle = euler_char_oracle(n, d)
        elif theory_name == "K-flip":
            oracle = euler_char_oracle(n, d - n - 1)
    return f.push(a), oracle


def cmd_push(args) -> int:
    n = parse_space(args.space)
    if 2 * n > args.precision:
        raise UsageError(f"P{n} needs precision >= {2 * n} (diagonal of P{n} x P{n})")
    value, oracle = push_value(args.theory, n, args.klass, args.precision)
    print(f"value: {_human(element_str(value))}")
    if oracle is None:
        return 0
    match = value.to_rational() == oracle
    print(f"oracle: {_fmt(oracle)}")
    print(f"match: {'yes' if match else 'no'}")
    return 0 if match else 1


# -- entry point -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrcalc", description="Exact Chern-class and Riemann-Roch calculus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def precision_arg(p):
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                       help=f"series truncation degree (default {DEFAULT_PRECISION})")

    cat = sub.add_parser("catalog", help="run the verification catalog")
    cat.add_argument("--case", action="append", help="run only this case (repeatable)")
    cat.add_argument("--json", metavar="PATH", help="write the report document here")
    cat.add_argument("--timings", action="store_true", help="record per-case milliseconds")
    precision_arg(cat)
    cat.set_defaults(func=cmd_catalog)

    ser = sub.add_parser("series", help="print series coefficients")
    group = ser.add_mutually_exclusive_group()
    group.add_argument("--todd", type=int, metavar="N", help="Todd series through degree N")
    group.add_argument("--fgl", choices=["additive", "multiplicative"], help="formal group law")
    ser.add_argument("--inverse", action="store_true", help="formal inverse of the law")
    precision_arg(ser)
    ser.set_defaults(func=cmd_series)

    push = sub.add_parser("push", help="push a class on P^n to the point")
    push.add_argument("--theory", choices=sorted(THEORY_BUILDERS), default="K")
    push.add_argument("--space", required=True, help="Pn")
    push.add_argument("--class", dest="klass", required=True, help="1, x^k, h^k or O(d)")
    precision_arg(push)
    push.set_defaults(func=cmd_push)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.precision < MIN_PRECISION:
            raise UsageError(f"precision must be at least {MIN_PRECISION}")
        return args.func(args)
    except UsageError as exc:
        print(f"rrcalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
