"""Command-line interface: construction, export, verification, spectrum scan.

Subcommands
    elements  dump the recursion table of matrix elements
    irrep     construct a (2j+1)-dimensional irreducible representation
    singvec   singular-vector coefficients for an integer weight
    verify    run exact verification suites (sl2, hopf, so4, e2, e3, qe3, all)
    spectrum  float scan of the inverse-map singularity

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error.  All structured output carries a top-level {"schema": "jordan-rep/1"}.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import ncseries, so4
from .exact import fraction_to_str
from .irrep import (
    Irrep,
    casimir,
    classical_rep,
    map_to_deformed,
    singular_vector,
    verify_hopf,
    verify_sl2_relations,
    verma_basis_irrep,
)
from .latexout import elements_latex, matrix_latex
from .report import VerificationReport
from .verma import build_table

SCHEMA = "jordan-rep/1"


def half_integer(text: str) -> Fraction:
    """Accept 'n' or 'odd/2'; anything else (decimals included) is rejected."""
    text = text.strip()
    try:
        if "/" in text:
            num_text, den_text = text.split("/", 1)
            num, den = int(num_text), int(den_text)
            if den != 2 or num % 2 == 0:
                raise ValueError
            value = Fraction(num, 2)
        else:
            value = Fraction(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an integer or an odd/2 half-integer"
        )
    if value < 0:
        raise argparse.ArgumentTypeError("j values must be nonnegative")
    return value


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def grid_spec(text: str):
    """'a:b:step' inclusive float grid."""
    try:
        start_s, stop_s, step_s = text.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not of the form a:b:step")
    if step <= 0:
        raise argparse.ArgumentTypeError("grid step must be positive")
    values = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + step * 1e-12:
            break
        values.append(v)
        k += 1
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanrep",
        description="Exact representations of the Jordanian-deformed algebras, "
        "with identity verification in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_el = sub.add_parser("elements", help="dump the matrix-element table")
    p_el.add_argument("--max-level", type=nonneg_int, required=True, metavar="L")
    p_el.add_argument("--lambda", dest="lam", type=Fraction, default=None,
                      help="specialize the weight symbol at an exact rational")
    p_el.add_argument("--format", choices=("json", "latex"), default="json")
    p_el.add_argument("--output", default=None, help="write here instead of stdout")

    p_ir = sub.add_parser("irrep", help="construct an irreducible representation")
    p_ir.add_argument("--j", type=half_integer, required=True,
                      help='half-integer spin, as "n" or "odd/2"')
    p_ir.add_argument("--basis", choices=("verma", "diagonal"), default="verma")
    p_ir.add_argument("--format", choices=("json", "latex"), default="json")
    p_ir.add_argument("--output", default=None)

    p_sv = sub.add_parser("singvec", help="singular-vector coefficients")
    p_sv.add_argument("--lambda", dest="lam", type=nonneg_int, required=True,
                      help="nonnegative integer weight (= 2j)")
    p_sv.add_argument("--output", default=None)

    p_v = sub.add_parser("verify", help="run exact verification suites")
    p_v.add_argument("suite", choices=("sl2", "hopf", "so4", "e2", "e3", "qe3", "all"))
    p_v.add_argument("--j-max", type=half_integer, default=Fraction(3),
                     help="largest spin for the sl2 suite")
    p_v.add_argument("--j1", type=half_integer, default=Fraction(1, 2))
    p_v.add_argument("--j2", type=half_integer, default=Fraction(1, 2))
    p_v.add_argument("--order", type=int, default=8,
                     help="truncation order for the series suites")
    p_v.add_argument("--from-json", default=None, metavar="FILE",
                     help="verify the sl2 relations of a representation read "
                          "from a JSON file instead of a built one")
    p_v.add_argument("--output", default=None)

    p_sp = sub.add_parser("spectrum", help="inverse-map singularity scan")
    p_sp.add_argument("--omega", type=float, required=True)
    p_sp.add_argument("--grid", type=grid_spec, required=True, metavar="a:b:step")
    p_sp.add_argument("--pi0", type=float, default=1.0)
    p_sp.add_argument("--pim", type=float, default=1.0)
    p_sp.add_argument("--out", choices=("csv", "json"), default="csv",
                      help="output format")
    p_sp.add_argument("--output", default=None, help="write here instead of stdout")
    return parser


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _json(payload: dict) -> str:
    payload = {"schema": SCHEMA, **payload}
    return json.dumps(payload, indent=2)


def cmd_elements(args) -> int:
    table = build_table(args.max_level)
    items = list(table.stored_items())
    if args.lam is not None:
        items = [(key, value.subs_lam(args.lam)) for key, value in items]
    if args.format == "latex":
        _emit(elements_latex(items), args.output)
        return 0
    payload = {
        "kind": "element-table",
        "max_level": args.max_level,
        "lambda": None if args.lam is None else fraction_to_str(args.lam),
        "elements": [
            {"generator": kind, "n": n, "m": m, "value": value.to_obj()}
            for (kind, n, m), value in items
        ],
    }
    _emit(_json(payload), args.output)
    return 0


def _build_irrep(j: Fraction, basis: str) -> Irrep:
    if basis == "verma":
        return verma_basis_irrep(j)
    return map_to_deformed(classical_rep(j))


def cmd_irrep(args) -> int:
    rep = _build_irrep(args.j, args.basis)
    if args.format == "latex":
        parts = [
            f"% j = {rep.j}, basis = {rep.basis}",
            "X = " + matrix_latex(rep.X),
            "Y = " + matrix_latex(rep.Y),
            "H = " + matrix_latex(rep.H),
        ]
        _emit("\n".join(parts), args.output)
        return 0
    _emit(_json(rep.to_obj()), args.output)
    return 0


def cmd_singvec(args) -> int:
    sv = singular_vector(Fraction(args.lam, 2))
    payload = {
        "kind": "singular-vector",
        "lambda": args.lam,
        "top_level": args.lam + 1,
        "coefficients": [c.to_obj() for c in sv.coeffs],
        "levels": {str(level): c.to_obj() for level, c in sorted(sv.levels().items())},
    }
    _emit(_json(payload), args.output)
    return 0


def _sl2_suite(j_max: Fraction) -> list[VerificationReport]:
    reports = []
    j = Fraction(1, 2)
    while j <= j_max:
        for basis in ("verma", "diagonal"):
            rep = _build_irrep(j, basis)
            report = verify_sl2_relations(rep)
            is_scalar, value = casimir(rep)
            classical_ok = is_scalar and value.subs_h(0).constant_value() == j * (j + 1)
            if classical_ok:
                report.add_pass("Casimir scalar with classical value j(j+1)", f"value {value}")
            else:
                report.add_fail(
                    "Casimir scalar with classical value j(j+1)",
                    f"is_scalar={is_scalar}, value={value}",
                )
            reports.append(report)
        j += Fraction(1, 2)
    return reports


def cmd_verify(args) -> int:
    reports: list[VerificationReport] = []
    if args.suite == "sl2":
        if args.from_json:
            with open(args.from_json) as fh:
                rep = Irrep.from_obj(json.load(fh))
            reports.append(verify_sl2_relations(rep))
        else:
            reports.extend(_sl2_suite(args.j_max))
    elif args.suite == "hopf":
        reports.append(verify_hopf(args.j1, args.j2))
    elif args.suite == "so4":
        rep = so4.build_so4(args.j1, args.j2)
        reports.append(so4.verify_so4_relations(rep))
        reports.append(so4.verify_so4_coalgebra(rep, rep))
    elif args.suite == "e2":
        reports.append(ncseries.suite_e2(args.order))
    elif args.suite == "e3":
        reports.append(ncseries.suite_e3(args.order))
    elif args.suite == "qe3":
        reports.append(ncseries.suite_qe3(args.order))
    elif args.suite == "all":
        reports.extend(_sl2_suite(args.j_max))
        reports.append(verify_hopf(Fraction(1, 2), Fraction(1, 2)))
        reports.append(verify_hopf(Fraction(1), Fraction(1, 2)))
        for j1, j2 in ((Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(1, 2)), (Fraction(1), Fraction(1))):
            rep = so4.build_so4(j1, j2)
            reports.append(so4.verify_so4_relations(rep))
            reports.append(so4.verify_so4_coalgebra(rep, rep))
        reports.append(ncseries.suite_e2(args.order))
        reports.append(ncseries.suite_e3(args.order))
        reports.append(ncseries.suite_qe3(args.order))
    payload = {
        "kind": "verification",
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [r.to_obj() for r in reports],
    }
    _emit(_json(payload), args.output)
    return 0 if all(r.passed for r in reports) else 1


def cmd_spectrum(args) -> int:
    scan = ncseries.momentum_spectrum(args.omega, args.grid, pi_minus=args.pim, pi_zero=args.pi0)
    if args.out == "json":
        _emit(_json({"kind": "spectrum", **scan}), args.output)
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["input_pi_plus", "class", "re_p_plus", "im_p_plus", "p_minus", "p_zero"])
    for row in scan["rows"]:
        writer.writerow(
            [
                row["input"],
                row["class"],
                "" if row["re_p_plus"] is None else row["re_p_plus"],
                "" if row["im_p_plus"] is None else row["im_p_plus"],
                "" if row["p_minus"] is None else row["p_minus"],
                "" if row["p_zero"] is None else row["p_zero"],
            ]
        )
    _emit(buf.getvalue(), args.output)
    return 0


def _normalize_argv(argv):
    """Glue values onto --grid so ranges starting at a negative number
    ("-3:3:0.5") are not mistaken for option names."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--grid" and i + 1 < len(argv):
            out.append(f"--grid={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_normalize_argv(list(argv)))
    try:
        if args.command == "elements":
            return cmd_elements(args)
        if args.command == "irrep":
            return cmd_irrep(args)
        if args.command == "singvec":
            return cmd_singvec(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "spectrum":
            return cmd_spectrum(args)
    except (ValueError, OSError) as exc:
        parser.exit(2, f"error: {exc}\n{parser.format_usage()}")
    parser.exit(2, parser.format_usage())


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
