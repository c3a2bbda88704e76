"""Command line front end.

Every verification is a subcommand; output is plain text by default or JSON
with --json.  Exit codes: 0 all checked assertions hold, 1 a verification
failed, 2 usage or parse error.  All numbers print as exact integers or
fractions p/q.  The reduction step ceiling honours the environment variable
BANACHALG_MAX_REDUCTION_STEPS.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .disc import example1_residual, example2_residual, remark_growth
from .ideal import (
    generator,
    groebner_certificate,
    normal_form,
    parse_generator_id,
    s_polynomial,
)
from .poly import ParseError, l1_norm, parse, to_str
from .quotient import divide_by_x, project
from .series import divergence_certificate, expected_coefficient, residual, solve_equation

USAGE_ERROR, VERIFY_ERROR = 2, 1


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="banachalg",
        description="Exact computations in a binomial quotient of an "
        "l1-normed polynomial algebra, and disc-algebra residual checks.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("expr")

    p = sub.add_parser("norm", help="l1 norm of a polynomial")
    p.add_argument("expr")

    p = sub.add_parser("spoly", help="S-polynomial of two generators")
    p.add_argument("id1", help="F<j> or G<k>,<l>")
    p.add_argument("id2", help="F<j> or G<k>,<l>")

    p = sub.add_parser("groebner-verify", help="run the Gröbner basis certificate")
    p.add_argument("--max-index", type=int, default=10)
    p.add_argument("--verbose", action="store_true", help="list passing identities too")

    p = sub.add_parser("divide-x", help="divide a class by x, if possible")
    p.add_argument("expr")

    p = sub.add_parser("solve-series", help="solve (x - y*t) f = z^2 up to t^K")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--bound", type=_parse_fraction, default=Fraction(10))

    p = sub.add_parser("strong-artin", help="residual t-orders of the approximants")
    p.add_argument("--example", type=int, choices=(1, 2), default=1)
    p.add_argument("--c-max", type=int, default=12)

    p = sub.add_parser("remark", help="growth table 2^(k!) of coefficient norms")
    p.add_argument("--k-max", type=int, default=5)

    return ap


def _emit(payload: dict, as_json: bool, text_lines: list[str]):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_nf(args) -> int:
    p = parse(args.expr)
    result, trace = normal_form(p)
    _emit(
        {
            "command": "nf",
            "input": to_str(p),
            "normal_form": to_str(result),
            "steps": len(trace.steps),
            "norm_bound": str(l1_norm(result)),
        },
        args.json,
        [to_str(result)],
    )
    return 0


def cmd_norm(args) -> int:
    p = parse(args.expr)
    _emit(
        {"command": "norm", "input": to_str(p), "l1_norm": str(l1_norm(p))},
        args.json,
        [str(l1_norm(p))],
    )
    return 0


def cmd_spoly(args) -> int:
    g1 = parse_generator_id(args.id1)
    g2 = parse_generator_id(args.id2)
    s = s_polynomial(generator(g1), generator(g2))
    _emit(
        {
            "command": "spoly",
            "f": str(g1),
            "g": str(g2),
            "s_polynomial": to_str(s),
        },
        args.json,
        [to_str(s)],
    )
    return 0


def cmd_groebner_verify(args) -> int:
    report = groebner_certificate(args.max_index)
    _emit(
        {"command": "groebner-verify", **report.to_json()},
        args.json,
        [report.to_text(verbose=args.verbose)],
    )
    return 0 if report.all_passed else VERIFY_ERROR


def cmd_divide_x(args) -> int:
    g = project(parse(args.expr))
    h = divide_by_x(g)
    _emit(
        {
            "command": "divide-x",
            "input": str(g),
            "result": None if h is None else str(h),
        },
        args.json,
        ["none" if h is None else str(h)],
    )
    return 0


def cmd_solve_series(args) -> int:
    if args.order < 0:
        raise argparse.ArgumentTypeError("--order must be nonnegative")
    f = solve_equation(args.order)
    res = residual(f)
    matches = all(
        f.coeffs[k] == expected_coefficient(k) for k in range(args.order + 1)
    )
    cert = divergence_certificate(f, args.bound)
    ok = matches and res.is_zero()
    lines = [
        f"f_{k} = {c}  (norm {c.norm_upper_bound})" for k, c in enumerate(f.coeffs)
    ]
    lines.append(f"residual identically zero through t^{args.order}: {res.is_zero()}")
    lines.append(f"coefficients equal k!*wk for all k: {matches}")
    if cert.reached_at is None:
        lines.append(
            f"norm^(1/k) >= {cert.bound} not reached within truncation order "
            f"{args.order}"
        )
    else:
        lines.append(f"norm^(1/k) >= {cert.bound} first at k = {cert.reached_at}")
    _emit(
        {
            "command": "solve-series",
            "order": args.order,
            "coefficients": f.to_json(),
            "residual_zero": res.is_zero(),
            "coefficients_match": matches,
            "certificate": cert.to_json(),
        },
        args.json,
        lines,
    )
    return 0 if ok else VERIFY_ERROR


def cmd_strong_artin(args) -> int:
    if args.c_max < 0:
        raise argparse.ArgumentTypeError("--c-max must be nonnegative")
    fn = example1_residual if args.example == 1 else example2_residual
    results = []
    all_ok = True
    for c in range(args.c_max + 1):
        order, lead = fn(c)
        bound = c + 1 if args.example == 1 else c
        ok = order is None or order >= bound
        all_ok = all_ok and ok
        results.append(
            {
                "c": c,
                "order": order,
                "bound": bound,
                "pass": ok,
                "leading": str(lead),
            }
        )
    lines = [
        f"c={r['c']:2d}  order {r['order']} >= {r['bound']}: "
        f"{'ok' if r['pass'] else 'FAIL'}  leading {r['leading']}"
        for r in results
    ]
    lines.append(
        f"family {args.example}: residual order bound holds for all "
        f"c <= {args.c_max}: {all_ok}"
    )
    _emit(
        {
            "command": "strong-artin",
            "example": args.example,
            "results": results,
            "all_pass": all_ok,
        },
        args.json,
        lines,
    )
    return 0 if all_ok else VERIFY_ERROR


def cmd_remark(args) -> int:
    table = remark_growth(args.k_max)
    lines = [f"k={k}  ||x^(k!)||_2 = {n}" for k, n in table]
    _emit(
        {
            "command": "remark",
            "rho": "2",
            "table": [{"k": k, "norm": str(n)} for k, n in table],
        },
        args.json,
        lines,
    )
    return 0


HANDLERS = {
    "nf": cmd_nf,
    "norm": cmd_norm,
    "spoly": cmd_spoly,
    "groebner-verify": cmd_groebner_verify,
    "divide-x": cmd_divide_x,
    "solve-series": cmd_solve_series,
    "strong-artin": cmd_strong_artin,
    "remark": cmd_remark,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
