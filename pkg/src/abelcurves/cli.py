"""Command-line entry point.

Exit codes: 0 success, 1 other failure (precondition, blow-up), 2 parse error,
3 out-of-scope equation, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import classify_equation
from .curves import find_invariant_curves, verify_invariance
from .equation import AbelEquation, element_to_json, load_equation, save_equation
from .errors import AbelError, InternalInconsistency, OutOfScopeError, ParseError
from .families import random_instance
from .frontend import RINGS, parse_expression
from .numeric import (TrajectoryConfig, displacement_grid, poincare_map, residual_sample,
                      write_grid_csv)
from .report import analyze, curves_section, darboux_section, dumps, to_text

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SCOPE, EXIT_INCONSISTENT = 0, 1, 2, 3, 4


def _load(args) -> AbelEquation:
    try:
        doc = json.loads(Path(args.equation).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.equation}: invalid JSON: {exc.msg}", exc.pos) from exc
    except OSError as exc:
        raise ParseError(f"cannot read {args.equation}: {exc.strerror}") from exc
    if getattr(args, "ring", None):
        doc["ring"] = args.ring
    return load_equation(doc)


def cmd_find(args):
    eq = _load(args)
    curves = find_invariant_curves(eq, jobs=args.jobs)
    return {"equation": eq.to_dict(), "curves": curves_section(curves)}


def cmd_analyze(args):
    return analyze(_load(args), jobs=args.jobs, numeric=not args.no_numeric)


def cmd_classify(args):
    eq = _load(args)
    rep = classify_equation(eq)
    return {"equation": eq.to_dict(), "bound": {
        "case": rep.case, "value": rep.value, "meaning": rep.meaning, "strict": rep.strict,
        "threshold": rep.threshold}}


def cmd_darboux(args):
    eq = _load(args)
    curves = find_invariant_curves(eq, jobs=args.jobs)
    return {"equation": eq.to_dict(), "curves": curves_section(curves),
            "darboux": darboux_section(eq, curves)}


def cmd_generate(args):
    eq, curves = random_instance(args.seed, args.ring, args.max_deg_A, args.mode)
    out = Path(args.output)
    save_equation(eq, out)
    truth = out.with_name(out.stem + ".truth.json")
    sidecar = {"seed": args.seed, "mode": args.mode, "ring": args.ring,
               "equation": eq.to_dict(), "curves": curves_section(curves)}
    truth.write_text(dumps(sidecar), encoding="utf-8")
    return {"equation": eq.to_dict(), "written": [str(out), str(truth)],
            "curves": curves_section(curves)}


def cmd_verify(args):
    eq = _load(args)
    p = parse_expression(args.curve, eq.ring)
    ok, residual = verify_invariance(p, -1, eq)
    result = {"curve": f"({args.curve})*x - 1", "invariant": ok,
              "residual": element_to_json(residual)}
    try:
        result["numeric_residual"] = residual_sample(eq, p, args.samples)
    except AbelError as exc:
        result["numeric_residual"] = None
        result["numeric_note"] = str(exc)
    return {"equation": eq.to_dict(), "numeric": {"verify": result}}


def cmd_poincare(args):
    eq = _load(args)
    cfg = TrajectoryConfig(rtol=args.rtol, atol=args.atol, x0=args.x0)
    x1 = poincare_map(eq, None, cfg)
    out = {"x0": args.x0, "x_2pi": x1, "displacement": x1 - args.x0,
           "rtol": cfg.rtol, "atol": cfg.atol}
    if args.csv:
        lo, hi, n = args.grid
        n = int(n)
        xs = [lo + (hi - lo) * k / max(n - 1, 1) for k in range(n)]
        write_grid_csv(displacement_grid(eq, xs, cfg), args.csv)
        out["csv"] = args.csv
    return {"equation": eq.to_dict(), "numeric": {"poincare": out}}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="abelcurves",
        description="Invariant curves p(t)x - 1 = 0 of x' = A x^3 + B x^2 + C x.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default: json)")
    common.add_argument("--jobs", type=int, default=1, help="parallelism cap (default: 1)")
    common.add_argument("--ring", choices=RINGS, default=None,
                        help="override the ring tag of the equation file")
    common.add_argument("--report", default=None, help="also write the report to this path")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_eq(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("equation", help="equation file (JSON with ring, A, B, C)")
        p.set_defaults(func=func)
        return p

    with_eq("find", cmd_find, "list all invariant curves")
    a = with_eq("analyze", cmd_analyze, "full analysis report")
    a.add_argument("--no-numeric", action="store_true", help="skip floating-point checks")
    with_eq("classify", cmd_classify, "bound case and value")
    with_eq("darboux", cmd_darboux, "cofactor dependence certificate")
    v = with_eq("verify", cmd_verify, "check one candidate curve p x - 1")
    v.add_argument("--curve", required=True, help="expression for p")
    v.add_argument("--samples", type=int, default=1000, help="numeric samples (default: 1000)")
    pc = with_eq("poincare", cmd_poincare, "Poincare map x(0) -> x(2 pi)")
    pc.add_argument("--x0", type=float, required=True, help="initial value")
    pc.add_argument("--rtol", type=float, default=1e-10, help="relative tolerance (default: 1e-10)")
    pc.add_argument("--atol", type=float, default=1e-12, help="absolute tolerance (default: 1e-12)")
    pc.add_argument("--grid", type=float, nargs=3, metavar=("LO", "HI", "N"),
                    default=(-0.5, 0.5, 21), help="x0 grid for --csv (default: -0.5 0.5 21)")
    pc.add_argument("--csv", default=None, help="write (x0, d(x0)) over --grid to this CSV file")

    g = sub.add_parser("generate", parents=[common], help="random equation with known curves")
    g.add_argument("--mode", choices=("single", "pair", "proportional", "random"),
                   default="random", help="construction (default: random)")
    g.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    g.add_argument("--max-deg-A", dest="max_deg_A", type=int, default=None,
                   help="degree cap for A (default: 8 poly, 4 trig)")
    g.add_argument("-o", "--output", required=True, help="equation file to write")
    g.set_defaults(func=cmd_generate)
    return ap


def _emit(report, args):
    text = to_text(report) if args.format == "text" else dumps(report)
    if args.report:
        Path(args.report).write_text(dumps(report), encoding="utf-8")
    sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and args.ring is None:
        args.ring = "poly-rational"
    try:
        report = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OutOfScopeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SCOPE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except AbelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(report, args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
