"""Command-line front end: parse symbols, dispatch commands, emit reports.

Output files are byte-deterministic: JSON keys are sorted, floats print
at 17 significant digits, and CSV cells use the re+imi convention.
Exit codes: 0 success, 2 parse or validation error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, checker, geometry, toeplitz
from .errors import (ConvergenceFailure, DegenerateCurve, FlagMissing,
                     MissingMultiplicity, ParseError, PointOnCurve,
                     SizeOutOfRange, UnknownName, WindingUndefined)
from .parsing import format_symbol, parse_symbol
from .regions import picture_from_json, validate_picture

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3

_INPUT_ERRORS = (ParseError, UnknownName, MissingMultiplicity, FlagMissing,
                 SizeOutOfRange, ValueError, KeyError, OSError,
                 json.JSONDecodeError)
_NUMERIC_ERRORS = (PointOnCurve, DegenerateCurve, WindingUndefined,
                   ConvergenceFailure)


def _dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return f"{obj:.17g}"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        inner = ",".join(f"{json.dumps(str(k))}:{_dumps(v)}"
                         for k, v in sorted(obj.items(), key=lambda kv: str(kv[0])))
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _point(z: complex):
    return [float(z.real), float(z.imag)]


def _hole_json(hole) -> dict:
    return {"representative": _point(hole.representative),
            "winding": hole.winding, "cell_count": hole.cell_count}


def _format_complex_cell(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _cmd_classify(args) -> int:
    symbol = parse_symbol(args.expr)
    report = toeplitz.classify_compact_stability(symbol, args.samples, args.grid)
    payload = {"uwe": report.uwe, "weyl": report.weyl, "a_weyl": report.a_weyl,
               "browder": report.browder, "a_browder": report.a_browder,
               "constant_on_boundary": report.constant_on_boundary,
               "holes": [_hole_json(h) for h in report.holes]}
    _write(args.out, _dumps(payload) + "\n")
    return EXIT_OK


def _cmd_curve(args) -> int:
    symbol = parse_symbol(args.expr)
    curve = toeplitz.boundary_curve(symbol, args.samples)
    if toeplitz.is_constant_on_boundary(symbol):
        holes = []
    else:
        holes = geometry.find_holes(curve, args.grid)
    payload = {"samples": [_point(z) for z in curve.samples],
               "holes": [_hole_json(h) for h in holes]}
    _write(args.out, _dumps(payload) + "\n")
    return EXIT_OK


def _cmd_truncate(args) -> int:
    symbol = parse_symbol(args.expr)
    matrix = toeplitz.truncation_matrix(symbol, args.n)
    rows = [",".join(_format_complex_cell(cell) for cell in row)
            for row in matrix.entries]
    _write(args.out, "\n".join(rows) + "\n")
    if args.eigs:
        values = toeplitz.eigenvalues(matrix)
        lines = [f"{v.real:.17g},{v.imag:.17g}" for v in values]
        _write(args.eigs, "\n".join(lines) + "\n")
    return EXIT_OK


def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValueError(f"malformed --param {pair!r}, expected k=v")
        key, raw = pair.split("=", 1)
        try:
            params[key] = int(raw)
        except ValueError:
            params[key] = float(raw)
    return params


def _cmd_catalog(args) -> int:
    entry = catalog.make(args.name, _parse_params(args.param))
    _write(args.out, _dumps(catalog.entry_to_json(entry)) + "\n")
    return EXIT_OK


def _cmd_check_picture(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    picture = picture_from_json(payload)
    violations = validate_picture(picture)
    if violations:
        for violation in violations:
            print(f"invalid picture: {violation}", file=sys.stderr)
        return EXIT_INPUT
    report = checker.evaluate_properties(picture)
    out = {"weyl": report.weyl, "browder": report.browder,
           "property_w": report.property_w, "uwe": report.uwe,
           "ve": report.ve, "we": report.we,
           "r1_consistent": report.r1_consistent,
           "witnesses": {name: _point(pt) for name, pt in report.witnesses.items()
                         if name != "a_weyl_note"}}
    if args.full:
        sp_connected, sp_radius = checker.closure_sp_connectedness(picture, args.grid)
        out["uwe_stable_under_compacts"] = checker.uwe_stable_under_compacts(
            picture, args.grid)
        out["closure_hp_connected"] = checker.closure_hp_connectedness(
            picture, args.grid)
        out["closure_sp_connected"] = sp_connected
        out["closure_sp_radius"] = sp_radius
    _write(args.out, _dumps(out) + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylkit",
        description="Weyl-type theorem checks and Toeplitz symbol classification")
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify-symbol",
                              help="stability report for a symbol expression")
    classify.add_argument("--expr", required=True)
    classify.add_argument("--samples", type=int, default=toeplitz.DEFAULT_SAMPLES)
    classify.add_argument("--grid", type=int, default=geometry.DEFAULT_GRID_RESOLUTION)
    classify.add_argument("--out", required=True)
    classify.set_defaults(func=_cmd_classify)

    curve = sub.add_parser("curve", help="boundary curve samples and holes")
    curve.add_argument("--expr", required=True)
    curve.add_argument("--samples", type=int, default=toeplitz.DEFAULT_SAMPLES)
    curve.add_argument("--grid", type=int, default=geometry.DEFAULT_GRID_RESOLUTION)
    curve.add_argument("--out", required=True)
    curve.set_defaults(func=_cmd_curve)

    truncate = sub.add_parser("truncate", help="basis truncation matrix as CSV")
    truncate.add_argument("--expr", required=True)
    truncate.add_argument("--n", type=int, required=True)
    truncate.add_argument("--out", required=True)
    truncate.add_argument("--eigs")
    truncate.set_defaults(func=_cmd_truncate)

    cat = sub.add_parser("catalog", help="export a named operator fixture")
    cat.add_argument("--name", required=True)
    cat.add_argument("--param", action="append")
    cat.add_argument("--out", required=True)
    cat.set_defaults(func=_cmd_catalog)

    check = sub.add_parser("check-picture", help="evaluate properties of a picture file")
    check.add_argument("--in", dest="infile", required=True)
    check.add_argument("--out", required=True)
    check.add_argument("--full", action="store_true",
                       help="add stability and closure fields")
    check.add_argument("--grid", type=int, default=geometry.DEFAULT_GRID_RESOLUTION)
    check.set_defaults(func=_cmd_check_picture)

    return parser


def run(argv) -> int:
    """Run one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _NUMERIC_ERRORS as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["run", "main", "parse_symbol", "format_symbol"]
