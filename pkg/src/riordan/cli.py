"""Batch command-line front end.

Subcommands construct family members (`uni`, `biv`), print arrays built from
parsed series expressions (`array`), emit the full bivariate table (`table`),
and run the verification harness (`verify`).  Output is deterministic:
identical flags produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .algebra import scalar_json, scalar_str
from .array2 import RiordanArray, matrix_latex, matrix_text
from .array3 import RiordanTriple
from .exprparse import ParseError, evaluate
from .laguerre import (
    biv_explicit,
    biv_riordan_table,
    biv_rodrigues,
    biv_via_uni,
    uni_explicit,
    uni_recurrence,
    uni_riordan,
    uni_rodrigues,
)
from .series import DEFAULT_ORDER
from .verify import HarnessConfig, run_all

TRUNC_ENV = "RIORDAN_TRUNC"

_UNI_ROUTES = {
    "explicit": uni_explicit,
    "recurrence": uni_recurrence,
    "riordan": uni_riordan,
    "rodrigues": uni_rodrigues,
}


class UsageError(ValueError):
    pass


def _default_trunc() -> int:
    raw = os.environ.get(TRUNC_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{TRUNC_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{TRUNC_ENV} must be positive, got {value}")
    return value


def _resolve_trunc(args, needed: int) -> int:
    trunc = args.trunc
    if trunc is None:
        return max(_default_trunc(), needed)
    if trunc < needed:
        raise UsageError(f"truncation {trunc} too small; need at least {needed}")
    return trunc


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _matrix_output(matrix, fmt: str) -> str:
    if fmt == "text":
        return matrix_text(matrix)
    if fmt == "json":
        return json.dumps([[scalar_json(v) for v in row] for row in matrix])
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in matrix:
            writer.writerow([scalar_str(v) for v in row])
        return buffer.getvalue().rstrip("\n")
    if fmt == "latex":
        return matrix_latex(matrix)
    raise UsageError(f"unsupported format {fmt!r}")


def _poly_output(poly, fmt: str, meta: dict) -> str:
    if fmt == "text":
        return str(poly)
    if fmt == "json":
        return json.dumps({**meta, "value": str(poly)})
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["dx", "dy", "coefficient"])
        for (dx, dy), c in poly.items():
            writer.writerow([dx, dy, str(c)])
        return buffer.getvalue().rstrip("\n")
    if fmt == "latex":
        return poly.latex()
    raise UsageError(f"unsupported format {fmt!r}")


def _cmd_uni(args) -> int:
    route = _UNI_ROUTES.get(args.route)
    if route is None:
        raise UsageError(f"unknown route {args.route!r}; choose from {sorted(_UNI_ROUTES)}")
    if args.route == "riordan":
        order = _resolve_trunc(args, args.n + 1)
        result = route(args.n, args.alpha, order)
    else:
        result = route(args.n, args.alpha)
    meta = {"n": args.n, "alpha": args.alpha, "route": args.route}
    _emit(_poly_output(result.value, args.format, meta), args)
    return 0


def _cmd_biv(args) -> int:
    if args.route == "explicit":
        result = biv_explicit(args.n, args.m)
    elif args.route == "via-x":
        result = biv_via_uni(args.n, args.m, "x")
    elif args.route == "via-y":
        result = biv_via_uni(args.n, args.m, "y")
    elif args.route == "rodrigues":
        result = biv_rodrigues(args.n, args.m)
    elif args.route == "riordan":
        order = _resolve_trunc(args, max(args.n, args.m) + 1)
        result = biv_riordan_table(args.n, args.m, order)[args.n][args.m]
    else:
        raise UsageError(f"unknown route {args.route!r}")
    meta = {"n": args.n, "m": args.m, "route": args.route}
    _emit(_poly_output(result.value, args.format, meta), args)
    return 0


def _eval_flag(expr: str, flag: str, order: int):
    try:
        return evaluate(expr, order)
    except ValueError as exc:  # includes ParseError, which carries the position
        raise ValueError(f"in --{flag} {expr!r}: {exc}") from exc


def _cmd_array(args) -> int:
    needed = max(args.rows, args.cols)
    order = _resolve_trunc(args, needed)
    g = _eval_flag(args.g, "g", order)
    f = _eval_flag(args.f, "f", order)
    if args.h is None:
        if args.layer is not None or args.layers is not None:
            raise UsageError("--layer/--layers need a three-series array (--h)")
        array = RiordanArray(g, f, args.flavor)
        _emit(_matrix_output(array.matrix(args.rows, args.cols), args.format), args)
        return 0
    triple = RiordanTriple(g, f, _eval_flag(args.h, "h", order), args.flavor)
    if args.layers is not None:
        if args.format != "json":
            raise UsageError("--layers output is JSON only")
        _emit(triple.layers_json(args.layers + 1, args.rows, args.cols), args)
        return 0
    layer = triple.layer(args.layer if args.layer is not None else 0)
    _emit(_matrix_output(layer.matrix(args.rows, args.cols), args.format), args)
    return 0


def _cmd_table(args) -> int:
    order = _resolve_trunc(args, max(args.rows, args.cols))
    table = biv_riordan_table(args.rows - 1, args.cols - 1, order)
    cells = [[str(entry.value) for entry in row] for row in table]
    if args.format == "text":
        _emit("\n".join(" | ".join(row) for row in cells), args)
    elif args.format == "json":
        _emit(json.dumps(cells), args)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in cells:
            writer.writerow(row)
        _emit(buffer.getvalue().rstrip("\n"), args)
    elif args.format == "latex":
        _emit(matrix_latex([[entry.value for entry in row] for row in table]), args)
    else:
        raise UsageError(f"unsupported format {args.format!r}")
    return 0


def _cmd_verify(args) -> int:
    cfg = HarnessConfig(mutate=args.mutate, only=args.only)
    if args.max_n is not None:
        cfg.max_n = args.max_n
    if args.max_k is not None:
        cfg.max_k = args.max_k
    reports = run_all(cfg)
    if args.format == "json":
        body = "\n".join(r.to_json() for r in reports)
    elif args.format == "text":
        lines = [r.summary() for r in reports]
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} checks passed")
        body = "\n".join(lines)
    else:
        raise UsageError(f"unsupported format {args.format!r} for verify")
    _emit(body, args)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan arrays and Laguerre polynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
        p.add_argument("--output", help="write to a file instead of standard output")
        p.add_argument("--trunc", type=int, help=f"series truncation order (default {DEFAULT_ORDER} or ${TRUNC_ENV})")

    uni = sub.add_parser("uni", help="univariate family member")
    uni.add_argument("--n", type=int, required=True)
    uni.add_argument("--alpha", type=int, required=True)
    uni.add_argument("--route", default="explicit", choices=sorted(_UNI_ROUTES))
    common(uni)
    uni.set_defaults(handler=_cmd_uni)

    biv = sub.add_parser("biv", help="bivariate family member")
    biv.add_argument("--n", type=int, required=True)
    biv.add_argument("--m", type=int, required=True)
    biv.add_argument("--route", default="explicit", choices=("explicit", "via-x", "via-y", "rodrigues", "riordan"))
    common(biv)
    biv.set_defaults(handler=_cmd_biv)

    array = sub.add_parser("array", help="array from series expressions")
    array.add_argument("--g", required=True)
    array.add_argument("--f", required=True)
    array.add_argument("--h")
    array.add_argument("--flavor", choices=("ordinary", "exponential"), default="ordinary")
    array.add_argument("--layer", type=int, help="layer of a three-series array")
    array.add_argument("--layers", type=int, help="export layers 0..K as JSON")
    array.add_argument("--rows", type=int, required=True)
    array.add_argument("--cols", type=int, required=True)
    common(array)
    array.set_defaults(handler=_cmd_array)

    table = sub.add_parser("table", help="bivariate family table")
    table.add_argument("--rows", type=int, required=True)
    table.add_argument("--cols", type=int, required=True)
    common(table)
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="run the identity harness")
    verify.add_argument("--only", help="run only checks whose name contains this")
    verify.add_argument("--max-n", type=int, dest="max_n")
    verify.add_argument("--max-k", type=int, dest="max_k")
    verify.add_argument("--mutate", action="store_true", help="inject a sign flip to prove sensitivity")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--output")
    verify.set_defaults(handler=_cmd_verify)

    return parser


_EXPR_FLAGS = ("--g", "--f", "--h")


def _join_expression_flags(argv) -> list:
    # expressions routinely start with '-', which argparse would read as a
    # flag; fold them into --flag=value form first
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _EXPR_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_expression_flags(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"expression error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
