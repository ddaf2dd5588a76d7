"""Command-line front end.

Exit status is 0 on success, 1 for usage errors and 2 when a computation
cannot be carried out (invalid shape, enumeration cap, too large a graph).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import analysis, conflictgraph, faultfree, series
from .errors import TilingError
from .shapes import is_rigid, make_params, max_faultfree_width


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_range(text: str) -> range:
    """``"2..10"`` or ``"4"`` as an inclusive range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def _at(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    if not sep or name.strip() not in ("t", "s"):
        raise argparse.ArgumentTypeError(f"expected t=VALUE or s=VALUE, got {text!r}")
    try:
        return name.strip(), Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad value in {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _fmt_number(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return str(v)
    return str(int(v))


def _add_shape(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", required=True, help="tile shape, e.g. 3,1,1")
    p.add_argument("-d", type=_positive, required=True, help="number of anchor rows")


def _add_variant(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", default="tilings", choices=list(series.VARIANTS))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ferrers-tilings", description="Tiling polynomials of Ferrers tiles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="shape summary")
    _add_shape(p)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("faultfree", help="fault-free generating polynomial B(x,t)")
    _add_shape(p)
    p.add_argument("--words", action="store_true", help="also list the fault-free words")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("sequence", help="coefficients of a generating series")
    _add_shape(p)
    _add_variant(p)
    p.add_argument("--n", type=_nonneg, required=True, help="last index")
    p.add_argument("--at", type=_at, help="specialize the variable, e.g. t=1")
    p.add_argument("--format", choices=["plain", "json", "bfile"], default="plain")

    p = sub.add_parser("poly", help="a single coefficient polynomial")
    _add_shape(p)
    _add_variant(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("check", help="first failure of a property along a series")
    _add_shape(p)
    _add_variant(p)
    p.add_argument("--property", required=True,
                   choices=["realroots", "interlacing", "logconcave", "unimodal"])
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--steps", choices=list(analysis.INTERLACING_STEPS), default="degree",
                   help="interlacing only: test degree steps or every step")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("scan-fatl", help="first non-real-rooted fat-L tiling polynomials")
    p.add_argument("--d", type=_int_range, required=True, help="range such as 2..10")
    p.add_argument("--r", type=_int_range, required=True, help="range such as 2..10")
    p.add_argument("--s-max", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("graph", help="conflict graph of an n-wide board")
    _add_shape(p)
    p.add_argument("-n", type=_positive, required=True, help="board width")
    p.add_argument("--claw", action="store_true")
    p.add_argument("--independence", action="store_true")
    p.add_argument("--auxiliary", action="store_true",
                   help="anchor-inequality edges, valid for every d")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    return parser


# -- commands ---------------------------------------------------------------


def _params(args):
    return make_params(args.mu, args.d)


def _emit_json(out, obj) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_info(args, out) -> None:
    params = _params(args)
    info = {
        "mu": list(params.mu),
        "d": params.d,
        "ell": params.ell,
        "board_height": params.board_height,
        "tiling_interpretation_valid": params.tiling_interpretation_valid,
        "hook": params.shape.is_hook,
        "rigid": is_rigid(params),
        "max_faultfree_width": max_faultfree_width(params),
        "predicted_claw": conflictgraph.predicted_claw(params) if params.ell >= 2 else None,
    }
    if args.format == "json":
        _emit_json(out, info)
        return
    for key, value in info.items():
        if isinstance(value, list):
            value = ",".join(map(str, value))
        out.write(f"{key}: {value}\n")


def cmd_faultfree(args, out) -> None:
    params = _params(args)
    b = faultfree.faultfree_gf(params)
    words = [str(w) for w in faultfree.enumerate_faultfree_words(params)] if args.words else None
    if args.format == "json":
        obj = {"mu": list(params.mu), "d": params.d, "B": b.to_json()}
        if words is not None:
            obj["words"] = words
        _emit_json(out, obj)
        return
    out.write(b.format("t") + "\n")
    for w in words or ():
        out.write(w + "\n")


def cmd_sequence(args, out) -> None:
    params = _params(args)
    rs = series.variant_series(params, args.variant)
    offset = series.variant_offset(args.variant)
    symbol = series.variant_symbol(args.variant)
    if args.at is not None and args.at[0] != symbol:
        raise UsageError(f"argument --at: variant {args.variant} uses the variable {symbol}")
    if args.format == "bfile" and args.at is None:
        raise UsageError("argument --format: bfile output needs --at")
    coeffs = series.series_coeffs(rs, args.n)
    indices = range(offset, args.n + 1)
    if args.at is not None:
        values = [coeffs[n](args.at[1]) for n in indices]
        if args.format == "bfile":
            for n, v in zip(indices, values):
                out.write(f"{n} {_fmt_number(v)}\n")
        elif args.format == "json":
            _emit_json(out, {"variant": args.variant, "offset": offset,
                             "at": {symbol: str(args.at[1])},
                             "values": [_fmt_number(v) for v in values]})
        else:
            out.write(" ".join(_fmt_number(v) for v in values) + "\n")
        return
    if args.format == "json":
        _emit_json(out, {"variant": args.variant, "offset": offset, "var": symbol,
                         "polys": [coeffs[n].to_json() for n in indices]})
        return
    for n in indices:
        out.write(f"{n}: {coeffs[n].format(symbol)}\n")


def cmd_poly(args, out) -> None:
    params = _params(args)
    offset = series.variant_offset(args.variant)
    if args.n < offset:
        raise UsageError(f"argument --n: variant {args.variant} starts at n={offset}")
    rs = series.variant_series(params, args.variant)
    p = series.series_coeffs(rs, args.n)[args.n]
    symbol = series.variant_symbol(args.variant)
    if args.format == "json":
        _emit_json(out, {"variant": args.variant, "n": args.n, "var": symbol, "poly": p.to_json()})
    else:
        out.write(p.format(symbol) + "\n")


def cmd_check(args, out) -> None:
    params = _params(args)
    rs = series.variant_series(params, args.variant)
    start = series.variant_offset(args.variant)
    if args.property == "interlacing":
        n = analysis.first_interlacing_failure(rs, args.n_max, start=start + 1, steps=args.steps)
    else:
        n = analysis.first_failure(rs, args.n_max, analysis.PROPERTIES[args.property], start)
    if args.format == "json":
        _emit_json(out, {"property": args.property, "variant": args.variant,
                         "n_max": args.n_max, "first_failure": n})
    elif n is None:
        out.write(f"none ≤ {args.n_max}\n")
    else:
        out.write(f"first failure: n={n}\n")


def cmd_scan_fatl(args, out) -> None:
    table = analysis.fatL_failure_scan(args.d, args.r, args.s_max, args.n_max, workers=args.workers)
    if args.format == "json":
        _emit_json(out, {"s_max": args.s_max, "n_max": args.n_max, "cells": [
            {"d": d, "r": r, "s": None if v is None else v[0], "n": None if v is None else v[1]}
            for (d, r), v in table.items()
        ]})
        return
    cell = lambda v: "NF" if v is None else f"{v[0]}->{v[1]}"  # noqa: E731
    rows = [["d\\r"] + [str(r) for r in args.r]]
    for d in args.d:
        rows.append([str(d)] + [cell(table[(d, r)]) for r in args.r])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def cmd_graph(args, out) -> None:
    params = _params(args)
    g = conflictgraph.build_conflict_graph(params, args.n, auxiliary=args.auxiliary)
    claw = conflictgraph.find_claw(g) if args.claw else None
    poly = conflictgraph.independence_polynomial(g) if args.independence else None
    if args.format == "json":
        obj = {"vertices": g.vertex_count, "edges": g.edge_count, "graph": g.to_json()}
        if args.claw:
            obj["claw"] = None if claw is None else [[p.column, p.row] for p in claw]
        if poly is not None:
            obj["independence"] = poly.to_json()
        _emit_json(out, obj)
        return
    out.write(f"vertices: {g.vertex_count}\nedges: {g.edge_count}\n")
    if args.claw:
        if claw is None:
            out.write("claw: none\n")
        else:
            out.write(f"claw: center {claw[0]} leaves {claw[1]} {claw[2]} {claw[3]}\n")
    if poly is not None:
        out.write(f"independence: {poly.format('t')}\n")


COMMANDS = {
    "info": cmd_info,
    "faultfree": cmd_faultfree,
    "sequence": cmd_sequence,
    "poly": cmd_poly,
    "check": cmd_check,
    "scan-fatl": cmd_scan_fatl,
    "graph": cmd_graph,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"ferrers-tilings: error: {exc}\n")
        return 1
    except (TilingError, ValueError, ArithmeticError) as exc:
        err.write(f"ferrers-tilings: {type(exc).__name__}: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
