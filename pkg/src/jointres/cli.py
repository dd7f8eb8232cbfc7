"""Command-line surface.

Exit codes: 0 success, 1 error, 2 the powersum formula produced an
identically zero operator (scripts can retry with new specializations).
Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import elimination, logbell
from .errors import JointresError, ParseError
from .io import (
    parse_problem,
    parse_resolvent,
    resolvent_file_from_result,
    serialize_resolvent,
)
from .powersum import (
    IdenticallyZero,
    Resolvent,
    ResolventTemplate,
    default_specializations,
    powersum_resolvent,
    thm83_template,
)
from .symmetric import powersums_from_elementary
from .tower import apply_lodo, numeric_residual


def _fail(kind, message, code=1):
    json.dump({"error": kind, "message": message}, sys.stderr)
    sys.stderr.write("\n")
    return code


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_template(value):
    if value.startswith("thm83:"):
        _, n, sym = value.split(":")
        return thm83_template(int(n), sym)
    doc = json.loads(_read(value))
    entries = doc["entries"] if isinstance(doc, dict) else doc
    return ResolventTemplate.from_pairs(
        [(e["order"], e.get("monomial", {})) for e in entries]
    )


def _load_specs(value, tpl, problem):
    if value == "grid":
        return default_specializations(tpl, problem, strategy="grid")
    doc = json.loads(_read(value))
    return [dict(s) for s in doc]


def cmd_powersums(args):
    problem = parse_problem(_read(args.problem))
    out = {}
    for P in problem.polynomials:
        ps = powersums_from_elementary(P, args.max)
        out[P.id] = [
            [problem.field.fmt(c) for c in p.num.coeffs]
            if p.is_poly()
            else {
                "num": [problem.field.fmt(c) for c in p.num.coeffs],
                "den": [problem.field.fmt(c) for c in p.den.coeffs],
            }
            for p in ps
        ]
    json.dump(out, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_resolve(args):
    problem = parse_problem(_read(args.problem))
    tpl = _load_template(args.template)
    if args.method == "powersum":
        specs = _load_specs(args.specs, tpl, problem)
        result = powersum_resolvent(problem, tpl, specs)
        rf = resolvent_file_from_result(
            problem.field, tpl, result, "powersum", specs
        )
    else:
        orders = sorted({m for m, _ in tpl.entries})
        result = elimination.eliminate_resolvent(problem, orders)
        if isinstance(result, elimination.Degenerate):
            rf = resolvent_file_from_result(
                problem.field, tpl, IdenticallyZero(), "eliminate"
            )
        else:
            out_tpl = elimination.template_from_lodo(result)
            prims = tuple(
                result.coeff(m).terms[mono].num for m, mono in out_tpl.entries
            )
            res = Resolvent(out_tpl, prims, _one_poly(problem.field), prims)
            rf = resolvent_file_from_result(problem.field, out_tpl, res, "eliminate")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(serialize_resolvent(rf))
    return 2 if rf.status == "identically_zero" else 0


def _one_poly(field):
    from .polys import XPoly

    return XPoly.from_int(field, 1)


def cmd_verify(args):
    problem = parse_problem(_read(args.problem))
    rf = parse_resolvent(_read(args.resolvent))
    if rf.status != "ok":
        return _fail("identically_zero", "resolvent file holds no operator")
    res = Resolvent(rf.template, rf.raw_t, rf.content, rf.primitive_r)
    lodo = res.to_lodo(problem.field)
    residue = apply_lodo(lodo, problem)
    if residue.is_zero():
        return 0
    return _fail("not_annihilated", "operator does not annihilate the target")


def cmd_eval(args):
    problem = parse_problem(_read(args.problem))
    rf = parse_resolvent(_read(args.resolvent))
    if rf.status != "ok":
        return _fail("identically_zero", "resolvent file holds no operator")
    subs = {}
    for item in args.subst:
        if "=" not in item:
            raise ParseError(f"bad substitution {item!r}, expected sym=value")
        sym, val = item.split("=", 1)
        subs[sym] = val
    precision = args.precision
    env = os.environ.get("JOINTRES_EVAL_PRECISION")
    if precision is None:
        precision = int(env) if env else 30
    lodo = Resolvent(
        rf.template, rf.raw_t, rf.content, rf.primitive_r
    ).to_lodo(problem.field)
    residual = numeric_residual(
        lodo, subs, problem, Fraction(args.x0), precision=precision
    )
    json.dump({"residual": residual}, sys.stdout)
    sys.stdout.write("\n")
    return 0


def cmd_bell(args):
    print(logbell.bell_b(args.m, args.k))
    return 0


def cmd_logres(args):
    lodo = logbell.log_resolvent(args.alpha)
    doc = [
        {
            "order": m,
            "coeffs": [
                coeff.field.fmt(v) for v in coeff.const_value().num.coeffs
            ],
        }
        for m, coeff in lodo.terms
    ]
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="jointres",
        description="Joint linear differential resolvents, exactly.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("powersums", help="print powersum tables")
    p.add_argument("--problem", required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(fn=cmd_powersums)

    p = sub.add_parser("resolve", help="compute a resolvent")
    p.add_argument("--problem", required=True)
    p.add_argument("--template", required=True,
                   help="template file, or thm83:<degree>:<symbol>")
    p.add_argument("--specs", default="grid",
                   help="specializations file, or 'grid'")
    p.add_argument("--method", choices=("powersum", "eliminate"),
                   default="powersum")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("verify", help="symbolic annihilation check")
    p.add_argument("--problem", required=True)
    p.add_argument("--resolvent", required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("eval", help="numeric residual at a sample point")
    p.add_argument("--problem", required=True)
    p.add_argument("--resolvent", required=True)
    p.add_argument("--subst", nargs="+", default=[], metavar="SYM=VALUE")
    p.add_argument("--x0", required=True)
    p.add_argument("--precision", type=int, default=None)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("bell", help="integer Bell table entry b(m, k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_bell)

    p = sub.add_parser("logres", help="integer-exponent log/exp demo operator")
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(fn=cmd_logres)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (JointresError, OSError, ValueError) as e:
        return _fail(type(e).__name__, str(e))


run_command = main


if __name__ == "__main__":
    sys.exit(main())
