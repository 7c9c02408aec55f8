"""Command-line front-end.

Subcommands: nf, mul, suite, rules, census.  The curve point comes from
--t (rational parameter, default 2) or from an explicit --q/--p pair, which
must satisfy p^2 = q^2 + q^3 exactly.  CURVEFORM_FUEL overrides the default
reduction fuel.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import galois, hopf
from .errors import CurveformError
from .nodal import basis_census, build_algebra, growth, freeness_check
from .parser import parse_expr
from .printing import format_poly
from .rewrite import DEFAULT_FUEL
from .scalar import Fraction, Scalar, curve_point_from_t, curve_point_validate

SUITES = ("diamond", "basis", "growth", "freeness", "hopf", "coideal",
          "identities", "alt", "galois", "units", "all")


def _add_common(p):
    p.add_argument("--t", default=None, metavar="RATIONAL",
                   help="curve parameter t, giving (q,p) = (t^2-1, t(t^2-1)); default 2")
    p.add_argument("--q", default=None, metavar="RATIONAL", help="explicit q coordinate")
    p.add_argument("--p", default=None, metavar="RATIONAL", help="explicit p coordinate")
    p.add_argument("--fuel", type=int, default=None,
                   help=f"reduction step budget (default {DEFAULT_FUEL}, "
                        "or CURVEFORM_FUEL)")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--max-len", type=int, default=None,
                   help="word-length bound for census/freeness/units")
    p.add_argument("--max-deg", type=int, default=None,
                   help="degree bound for coideal/galois checks")
    p.add_argument("--samples", type=int, default=200,
                   help="random elements for the Hopf axiom check")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="curveform",
        description="Exact rewriting kernel and verification suite for the "
                    "Hopf algebra of the nodal cubic y^2 = x^2 + x^3.")
    sub = ap.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", help="normal form of an expression")
    p_nf.add_argument("expr")
    _add_common(p_nf)

    p_mul = sub.add_parser("mul", help="normal form of a product of expressions")
    p_mul.add_argument("exprs", nargs="+")
    _add_common(p_mul)

    p_suite = sub.add_parser("suite", help="run a verification suite")
    p_suite.add_argument("name", choices=SUITES)
    _add_common(p_suite)

    p_rules = sub.add_parser("rules", help="dump the completed rule system")
    _add_common(p_rules)

    p_census = sub.add_parser("census", help="basis census (irreducible vs pattern words)")
    _add_common(p_census)
    return ap


def resolve_point(args):
    if args.q is not None or args.p is not None:
        if args.t is not None or args.q is None or args.p is None:
            raise SystemExit("point selection: give either --t, or both --q and --p")
        return curve_point_validate(Scalar(Fraction(args.q)), Scalar(Fraction(args.p)))
    t = Fraction(args.t) if args.t is not None else Fraction(2)
    return curve_point_from_t(t)


def resolve_fuel(args):
    if args.fuel is not None:
        return args.fuel
    env = os.environ.get("CURVEFORM_FUEL")
    return int(env) if env else DEFAULT_FUEL


def _emit(args, obj, text_lines):
    if args.json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def run_suites(name, alg, args, fuel):
    maps = hopf.StructureMaps(alg.point)
    max_len = args.max_len
    max_deg = args.max_deg if args.max_deg is not None else 6
    reports = []
    names = [name] if name != "all" else \
        ["diamond", "basis", "growth", "freeness", "hopf", "coideal",
         "identities", "alt", "galois", "units"]
    for n in names:
        if n == "diamond":
            rep = alg.diamond_report.to_json()
            rep["check"] = "diamond"
            rep["rules"] = len(alg.system.rules)
            rep.pop("entries", None)
            reports.append(rep)
        elif n == "basis":
            reports.append(basis_census(alg, max_len or 6).to_json())
        elif n == "growth":
            rep = growth(alg, max_len or 200).to_json()
            rep["status"] = "pass" if abs(rep["exponent"] - 3.0) <= 0.2 else "fail"
            reports.append(rep)
        elif n == "freeness":
            reports.append(freeness_check(alg, max_len or 5, samples=100,
                                          seed=args.seed, fuel=fuel).to_json())
        elif n == "hopf":
            reports.append(hopf.check_welldefined(alg, maps, fuel).to_json())
            reports.append(hopf.check_hopf_axioms(
                alg, maps, samples=args.samples, seed=args.seed, fuel=fuel).to_json())
        elif n == "coideal":
            reports.append(hopf.check_coideal(alg, maps, max_deg, fuel).to_json())
        elif n == "identities":
            reports.append(hopf.check_identities(alg, fuel).to_json())
        elif n == "alt":
            reports.append(hopf.check_alt_presentation(alg, fuel).to_json())
        elif n == "galois":
            reports.append(galois.recovery_check(alg, maps, max_deg, fuel).to_json())
            reports.append(galois.witness_check(alg, fuel).to_json())
        elif n == "units":
            rep = hopf.units_suite(alg, max_len=max_len or 6, fuel=fuel).to_json()
            # pass iff the group-like-times-scalar candidates invert and the rest do not
            expected = {"a": True, "b": True, "a^2*b": True, "a^-1*b": True,
                        "1+x": False, "x": False, "c": False, "1+y": False}
            rep["status"] = ("pass" if all(
                e["invertible"] == expected.get(e["element"])
                for e in rep["entries"]) else "fail")
            reports.append(rep)
    return reports


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        point = resolve_point(args)
        fuel = resolve_fuel(args)
        if args.command == "nf":
            alg = build_algebra(point, fuel=fuel)
            nf = alg.nf(parse_expr(args.expr, point), fuel)
            _emit(args, {"input": args.expr, "normal_form": nf.to_json(),
                         "point": point.to_json(), "rendered": format_poly(nf)},
                  [format_poly(nf)])
            return 0
        if args.command == "mul":
            alg = build_algebra(point, fuel=fuel)
            prod = parse_expr(args.exprs[0], point)
            for e in args.exprs[1:]:
                prod = prod * parse_expr(e, point)
            nf = alg.nf(prod, fuel)
            _emit(args, {"inputs": args.exprs, "normal_form": nf.to_json(),
                         "point": point.to_json(), "rendered": format_poly(nf)},
                  [format_poly(nf)])
            return 0
        if args.command == "rules":
            alg = build_algebra(point, fuel=fuel)
            obj = {"point": point.to_json(), "rules": alg.system.to_json(),
                   "completion": alg.completion_log.to_json()}
            lines = [f"{r.lhs} -> {format_poly(r.rhs)}   [{r.origin}]"
                     for r in alg.system.rules]
            _emit(args, obj, lines)
            return 0
        if args.command == "census":
            alg = build_algebra(point, fuel=fuel)
            rep = basis_census(alg, args.max_len or 6)
            _emit(args, rep.to_json(),
                  [f"L={i}: irreducible={a} pattern={b} enumerated={c}"
                   for i, (a, b, c) in enumerate(zip(
                       rep.irreducible_counts, rep.pattern_scan_counts,
                       rep.pattern_enum_counts))]
                  + [f"verdict: {'pass' if rep.ok else 'fail'}"])
            return 0 if rep.ok else 1
        # suite
        alg = build_algebra(point, fuel=fuel)
        reports = run_suites(args.name, alg, args, fuel)
        all_pass = all(r.get("status") != "fail" and r.get("ok", True)
                       for r in reports)
        obj = {"point": point.to_json(), "suite": args.name, "seed": args.seed,
               "status": "pass" if all_pass else "fail", "reports": reports}
        lines = []
        for r in reports:
            status = r.get("status") or ("pass" if r.get("ok", True) else "fail")
            lines.append(f"[{status.upper():4}] {r.get('check', args.name)}")
        lines.append(f"suite {args.name}: {'pass' if all_pass else 'FAIL'}")
        _emit(args, obj, lines)
        return 0 if all_pass else 1
    except CurveformError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
