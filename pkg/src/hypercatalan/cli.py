"""``hc`` command line: closed forms, series, projections, root solving and checks.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 no convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import catalan_core, geode, sequences
from .errors import HyperCatalanError
from .root_solver import ExactPolynomial, SolveConfig, bootstrap_solve, to_decimal
from .series import format_coefficient, format_series, solve_S, solve_T, to_json
from .type_vectors import HYPER, TUTRANK, TypeVector

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DIVERGED = 0, 1, 2, 3

DEFAULT_FACES = 4
DEFAULT_DEGREE = 5
DEFAULT_DIGITS = 20

PROJECT_TERMS = {
    "schroeder": 9,
    "riordan": 11,
    "cayley": 7,
    "geode-schroeder": 6,
    "geode-riordan": 8,
    "geode-cayley": 5,
    "jumbo-riordan": 7,
    "jumbo-edge-layers": 4,
    "jumbo-vertex-layers": 3,
    "tutrank-catalan": 11,
    "tutrank-riordan": 11,
    "fuss": 4,
}


class UsageError(Exception):
    pass


def _digits_default() -> int:
    raw = os.environ.get("HC_PRECISION")
    if not raw:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HC_PRECISION must be an integer, got {raw!r}")


def _type(text: str, base: int = HYPER) -> TypeVector:
    try:
        return TypeVector.parse(text, base)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad type vector {text!r}: {exc}")


def _emit_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


# --- commands -----------------------------------------------------------------

def cmd_c(args) -> tuple:
    m = _type(args.type)
    if args.power is None:
        value = catalan_core.hyper_catalan(m)
    else:
        value = catalan_core.hyper_catalan_power(m, args.power)
    return EXIT_OK, f"{value}\n"


def cmd_tutrank(args) -> tuple:
    return EXIT_OK, f"{catalan_core.tutrank(_type(args.type, TUTRANK))}\n"


def cmd_geode(args) -> tuple:
    return EXIT_OK, f"{geode.geode_number(_type(args.type))}\n"


def cmd_series(args) -> tuple:
    kind = args.kind
    if kind == "S":
        s = solve_S(args.faces, args.degree)
    elif kind == "G":
        s = geode.geode_series(args.faces, args.degree)
    elif kind == "T":
        s = solve_T(args.faces, args.degree, args.k1)
    else:
        s = geode.jumbo_geode_series(args.faces, args.degree, args.k1)
    if args.format == "json":
        doc = {"kind": kind}
        doc.update(to_json(s))
        return EXIT_OK, _emit_json(doc)
    if args.format == "csv":
        rows = [["type", "faces", "coefficient"]]
        for parts, c in s.items_raw():
            rows.append([",".join(map(str, parts)), sum(parts), format_coefficient(c)])
        return EXIT_OK, _csv(rows)
    return EXIT_OK, format_series(s) + "\n"


def _projection(args):
    preset = args.preset
    terms = args.terms if args.terms is not None else PROJECT_TERMS[preset]
    deg = args.degree
    if preset == "schroeder":
        return sequences.schroeder(terms, deg), terms
    if preset == "riordan":
        return sequences.riordan(terms, deg), terms
    if preset == "cayley":
        return sequences.cayley(terms, deg), terms
    if preset.startswith("geode-"):
        return sequences.project_geode(preset[6:], terms, deg), terms
    if preset == "jumbo-riordan":
        return sequences.project_jumbo("riordan", terms, max_degree=deg), terms
    if preset == "jumbo-edge-layers":
        return sequences.project_jumbo("edge_layers", terms, max_degree=deg), terms
    if preset == "jumbo-vertex-layers":
        k1 = args.k1 if args.k1 is not None else 2
        return sequences.project_jumbo("vertex_layers", terms, k1, max_degree=deg), terms
    if preset == "tutrank-catalan":
        return sequences.tutrank_catalan(terms, not args.full_t), terms
    if preset == "tutrank-riordan":
        return sequences.tutrank_riordan(terms, not args.full_t), terms
    raise UsageError(f"unknown preset {preset!r}")


def cmd_project(args) -> tuple:
    if args.preset == "fuss":
        if args.n is None:
            raise UsageError("fuss needs --n")
        terms = args.terms if args.terms is not None else PROJECT_TERMS["fuss"]
        values = sequences.fuss_reversion(args.n, terms)
        return EXIT_OK, _emit_sequence(values, 1, args, f"Fuss n={args.n}")
    p, terms = _projection(args)
    if len(p.variables) == 1:
        start = 1 if args.preset.startswith("tutrank") and not args.full_t else 0
        values = p.sequence(terms, start)
        return EXIT_OK, _emit_sequence(values, start, args, p.name, p.oeis)
    if args.format == "json":
        return EXIT_OK, sequences.projection_to_json(p) + "\n"
    leads = sorted({k[0] for k in p.terms})
    if args.preset in ("cayley", "geode-cayley"):
        leads = [lead for lead in leads if 1 <= lead <= terms]
    rows = p.rows(leads)
    if args.format == "csv":
        inner = ",".join(p.variables[1:])
        return EXIT_OK, sequences.table_to_csv(rows, p.variables[0], inner)
    lines = []
    for lead in (reversed(leads) if args.descending else leads):
        row = rows[lead]
        items = sorted(row.items(), reverse=args.descending)
        body = " + ".join(
            _mono(c, zip(p.variables[1:], exps)) for exps, c in items
        )
        lines.append(f"{p.variables[0]}^{lead}: {body}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _mono(c, pairs) -> str:
    mono = "*".join(v + (f"^{e}" if e > 1 else "") for v, e in pairs if e)
    if not mono:
        return str(c)
    return mono if c == 1 else f"{c}*{mono}"


def _emit_sequence(values, start, args, name, oeis=None) -> str:
    idx = list(range(start, start + len(values)))
    if args.descending:
        values = list(reversed(values))
        idx = list(reversed(idx))
    if args.format == "json":
        return _emit_json({
            "name": name,
            "oeis": oeis,
            "offset": start,
            "order": "descending" if args.descending else "ascending",
            "values": [sequences._json_number(v) for v in values],
        })
    if args.format == "csv":
        return _csv([["index", "value"]] + [[i, v] for i, v in zip(idx, values)])
    if args.format == "bfile":
        return "".join(f"{i} {v}\n" for i, v in zip(idx, values))
    return " ".join(str(v) for v in values) + "\n"


def cmd_solve(args) -> tuple:
    try:
        p = ExactPolynomial.parse(args.coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficients {args.coeffs!r}: {exc}")
    if p.degree < 1:
        raise UsageError("polynomial must be nonconstant")
    digits = args.digits if args.digits is not None else _digits_default()
    try:
        cfg = SolveConfig(args.faces, args.degree, args.iters, digits, args.guess)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = bootstrap_solve(p, cfg)
    if args.format == "json":
        out = _emit_json(report.as_dict())
    elif args.format == "csv":
        rows = [["iteration", "shift_point", "increment", "residual"]]
        for r in report.records:
            inc = "" if r.increment is None else to_decimal(r.increment, digits)
            rows.append([r.index, to_decimal(r.shift_point, digits), inc, to_decimal(r.residual, digits)])
        rows.append(["root", report.root_decimal(), "", to_decimal(report.root_residual, digits)])
        out = _csv(rows)
    else:
        out = f"{report.root_decimal()}\n"
    if report.error:
        print(f"hc solve: {report.error}", file=sys.stderr)
    if not report.converged:
        print("hc solve: residuals did not decrease; try a closer guess or more faces", file=sys.stderr)
        return EXIT_DIVERGED, out
    return EXIT_OK, out


def cmd_verify(args) -> tuple:
    suite = args.suite
    faces = args.faces if args.faces is not None else DEFAULT_FACES
    degree = args.degree if args.degree is not None else DEFAULT_DEGREE
    if suite == "segner":
        rep = catalan_core.segner_check(args.max_n if args.max_n is not None else 20)
    elif suite == "fine":
        rep = catalan_core.fine_check(args.max_n if args.max_n is not None else 12)
    elif suite == "recurrence":
        rep = catalan_core.recurrence_check(faces, degree)
    elif suite == "facelayers":
        rep = catalan_core.facelayer_check(faces, degree)
    elif suite == "mane":
        rep = catalan_core.mane_check(args.max_r, faces, degree)
    elif suite == "tutrank":
        k1 = args.k1 if args.k1 is not None else 5
        rep = catalan_core.tutrank_check(faces, degree, k1)
    elif suite == "geode-xcheck":
        rep = geode.geode_crosscheck(faces, degree)
    elif suite == "jumbo":
        rep = geode.jumbo_factorization_check(faces, degree)
    else:
        rep = sequences.fuss_check(args.max_n if args.max_n is not None else 6,
                                  args.faces if args.faces is not None else 6)
    if args.format == "json":
        doc = {
            "suite": rep.name,
            "passed": rep.passed,
            "checked": rep.checked,
            "counterexample": {k: str(v) for k, v in (rep.counterexample or {}).items()} or None,
        }
        out = _emit_json(doc)
    else:
        out = rep.summary() + "\n"
    return (EXIT_OK if rep.passed else EXIT_FAIL), out


# --- parser -------------------------------------------------------------------

def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hc",
        description="Exact hyper-Catalan, Geode and Tutrank arrays, series projections and polynomial roots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("c", help="hyper-Catalan number C_m, or the Mane power with --power")
    p.add_argument("--type", required=True, help="type vector m2,m3,... (empty string for the null type)")
    p.add_argument("--power", type=_nat, default=None, help="coefficient of t^m in S^r")
    p.set_defaults(func=cmd_c)

    p = sub.add_parser("tutrank", help="Tutrank number T_k for k = k1,k2,...")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_tutrank)

    p = sub.add_parser("geode", help="Geode number G_m")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_geode)

    p = sub.add_parser("series", help="truncated S, T, G or J")
    p.add_argument("kind", choices=["S", "T", "G", "J"])
    p.add_argument("--faces", type=_nat, default=DEFAULT_FACES)
    p.add_argument("--degree", type=_nat, default=DEFAULT_DEGREE)
    p.add_argument("--k1", type=_nat, default=None, help="cap on the two-gon count (T and J)")
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("project", help="named sequence or table from a series projection")
    p.add_argument("preset", choices=sorted(PROJECT_TERMS))
    p.add_argument("--terms", type=_nat, default=None, help="sequence length, or number of rows for tables")
    p.add_argument("--n", type=_nat, default=None, help="trinomial degree for fuss")
    p.add_argument("--degree", type=_nat, default=None, help="drop t_k above this index")
    p.add_argument("--k1", type=_nat, default=None, help="two-gon cap for jumbo-vertex-layers")
    p.add_argument("--full-t", action="store_true", help="project T rather than T-1 (tutrank presets)")
    p.add_argument("--descending", action="store_true")
    p.add_argument("--format", choices=["plain", "csv", "json", "bfile"], default="plain")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("solve", help="polynomial root by series evaluation and Taylor-shift bootstrapping")
    p.add_argument("--coeffs", required=True, help="a0,a1,...,ad for a0 + a1 x + ... + ad x^d")
    p.add_argument("--guess", default="0")
    p.add_argument("--iters", type=_nat, default=2)
    p.add_argument("--faces", type=_nat, default=3)
    p.add_argument("--degree", type=_nat, default=None)
    p.add_argument("--digits", type=_nat, default=None, help="working precision (env HC_PRECISION)")
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="identity checks; prints the first counterexample on failure")
    p.add_argument("suite", choices=["segner", "fine", "recurrence", "facelayers", "mane",
                                     "tutrank", "geode-xcheck", "jumbo", "fuss"])
    p.add_argument("--max-n", type=_nat, default=None)
    p.add_argument("--max-r", type=_nat, default=4)
    p.add_argument("--faces", type=_nat, default=None)
    p.add_argument("--degree", type=_nat, default=None)
    p.add_argument("--k1", type=_nat, default=None)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        code, out = args.func(args)
    except UsageError as exc:
        print(f"hc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HyperCatalanError, ValueError) as exc:
        print(f"hc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
