"""Command line front end: ``walksum {sum,table,verify,walk,oeis}``.

Machine formats (csv, json, bfile) are stable; exact numbers are always
written as full decimal strings (``num/den`` for non-integral rationals).
Polynomial coefficient rows in csv/json run low-to-high (c_0, c_1, ...).
The default ``--format`` is taken from ``$WALKSUM_FORMAT`` when set.

Exit codes: 0 success, 1 failed check / disagreement, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .abssum import applicable_methods, compute
from .exactnum import format_exact
from .families import KINDS, family
from .polyring import UniPoly, render_descending, render_factored
from .randwalk import simulate_abs_moment
from .sequences import bfile_lines

FORMAT_ENV = "WALKSUM_FORMAT"
FORMATS = ("text", "csv", "json", "bfile")
SUM_METHODS = ("brute", "symmetric", "recursive", "closed", "genfunc", "all")
FAMILY_LABELS = {"P": "P", "Q": "Q", "gandhi": "P~", "qtilde": "Q~", "df": "F"}
MC_HARD_FAIL_SIGMA = 6.0


class UsageError(Exception):
    pass


def _csv_text(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return v


# -- sum ---------------------------------------------------------------------

def cmd_sum(args) -> int:
    r, n = args.r, args.n
    if args.method == "genfunc" and r % 2:
        raise UsageError("--method genfunc needs an even --r")
    methods = applicable_methods(r) if args.method == "all" else [args.method]
    values = {m: compute(r, n, m) for m in methods}
    fmt = args.format
    if fmt == "json":
        lines = [json.dumps({"r": r, "n": n, "method": m, "value": str(v)}) for m, v in values.items()]
        _emit("\n".join(lines))
    elif fmt == "csv":
        _emit(_csv_text([("r", "n", "method", "value")] + [(r, n, m, v) for m, v in values.items()]))
    elif fmt == "text":
        width = max(len(m) for m in values)
        _emit("\n".join(f"S_{r}({n}) [{m:<{width}}] = {v}" for m, v in values.items()))
    else:
        raise UsageError(f"format {fmt!r} is not supported by 'sum'")
    if len(set(values.values())) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 1
    return 0


# -- table -------------------------------------------------------------------

def triangle_lines(rows: Sequence[Sequence[int]]) -> list[str]:
    """Center rows of integers on the width of the widest row."""
    rendered = [" ".join(str(c) for c in row) for row in rows]
    width = max(len(s) for s in rendered)
    return [s.center(width).rstrip() for s in rendered]


def _uni_text(label: str, r: int, p: UniPoly, var: str) -> str:
    body = render_factored(p, var) if var == "n" else render_descending(p, var)
    return f"{label}_{r} = {body}"


def cmd_table(args) -> int:
    kind, max_r, fmt = args.family, args.max_r, args.format
    if kind not in KINDS:
        raise UsageError(f"unknown family {kind!r}; choose from {', '.join(KINDS)}")
    if kind in ("gandhi", "qtilde", "df") and max_r < 1:
        raise UsageError(f"family {kind} starts at r = 1")
    table = family(kind, max_r)
    label = FAMILY_LABELS[kind]

    if kind == "df":
        if fmt == "text":
            _emit("\n".join(f"F_{r} = {f}" for r, f in table.items()))
        elif fmt == "csv":
            rows = [("r", "a", "b", "c", "coeff")]
            for r, f in table.items():
                rows += [(r, a, b, c, v) for (a, b, c), v in f.sorted_terms()]
            _emit(_csv_text(rows))
        elif fmt == "json":
            _emit(json.dumps({
                "family": kind,
                "base": table.base,
                "polys": [
                    {"r": r, "terms": [{"x": a, "y": b, "z": c, "coeff": str(v)}
                                       for (a, b, c), v in f.sorted_terms()]}
                    for r, f in table.items()
                ],
            }))
        else:
            raise UsageError(f"format {fmt!r} is not supported by 'table'")
        return 0

    coeffs = {r: [format_exact(c) for c in p.coeffs] for r, p in table.items()}
    if fmt == "text":
        if kind in ("gandhi", "qtilde"):
            _emit("\n".join(triangle_lines([p.int_coeffs()[::-1] for p in table])))
        else:
            _emit("\n".join(_uni_text(label, r, p, "n") for r, p in table.items()))
    elif fmt == "csv":
        width = max(len(c) for c in coeffs.values())
        header = ("r",) + tuple(f"c{i}" for i in range(width))
        _emit(_csv_text([header] + [(r, *c) for r, c in coeffs.items()]))
    elif fmt == "json":
        _emit(json.dumps({
            "family": kind,
            "base": table.base,
            "orientation": "low-to-high",
            "polys": [{"r": r, "coeffs": c} for r, c in coeffs.items()],
        }))
    else:
        raise UsageError(f"format {fmt!r} is not supported by 'table'")
    return 0


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .suite import run_suite

    report = run_suite(args.max_r, args.max_n)
    if args.format == "json":
        _emit(json.dumps(report.as_dict(), default=str))
    elif args.format == "text":
        _emit("\n".join(report.lines()))
    else:
        raise UsageError(f"format {args.format!r} is not supported by 'verify'")
    if not report.passed:
        section, check = report.first_failure()
        print(f"error: [{section}] {check.name}: {check.counterexample}", file=sys.stderr)
        return 1
    return 0


# -- walk --------------------------------------------------------------------

def cmd_walk(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.shards > args.samples:
        raise UsageError("--shards cannot exceed --samples")
    rep = simulate_abs_moment(args.n, args.r, args.samples, args.seed, args.shards)
    d = rep.as_dict()
    if args.format == "json":
        _emit(json.dumps(d))
    elif args.format == "csv":
        _emit(_csv_text([list(d), list(d.values())]))
    elif args.format == "text":
        _emit("\n".join(f"{k:<12} {v}" for k, v in d.items()))
    else:
        raise UsageError(f"format {args.format!r} is not supported by 'walk'")
    if not rep.within(MC_HARD_FAIL_SIGMA):
        print(f"error: estimate is {rep.z_score:.2f} standard errors from the exact value",
              file=sys.stderr)
        return 1
    return 0


# -- oeis --------------------------------------------------------------------

def cmd_oeis(args) -> int:
    if args.sequence not in ("genocchi", "scaled"):
        raise UsageError(f"unknown sequence {args.sequence!r}; choose genocchi or scaled")
    _emit("\n".join(bfile_lines(args.sequence, args.upto_r, args.sign)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in FORMATS:
        default_fmt = "text"
    parser = argparse.ArgumentParser(prog="walksum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_arg(p):
        p.add_argument("--format", choices=FORMATS, default=default_fmt)

    p = sub.add_parser("sum", help="compute S_r(n)")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=SUM_METHODS, default="all")
    fmt_arg(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("table", help="print a polynomial family")
    p.add_argument("--family", required=True, help="one of: " + ", ".join(KINDS))
    p.add_argument("--max-r", type=_nonneg, required=True)
    fmt_arg(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the identity / oracle / conjecture suite")
    p.add_argument("--max-r", type=_pos, default=10)
    p.add_argument("--max-n", type=_pos, default=30)
    fmt_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("walk", help="simulate E|Y_2n|^r")
    p.add_argument("--n", type=_pos, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--samples", type=_pos, default=100000)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--shards", type=_pos, default=1)
    fmt_arg(p)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("oeis", help="emit a b-file")
    p.add_argument("--sequence", required=True, help="genocchi or scaled")
    p.add_argument("--upto-r", type=_pos, required=True)
    p.add_argument("--sign", choices=("signed", "absolute"), default="signed")
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"walksum {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
