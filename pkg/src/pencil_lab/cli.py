"""Command line interface: ``pencil-lab <command> [options] ...``.

Exit codes: 0 success, 1 computation gave up (slice or extraction budget
exhausted), 2 input error, 3 failed corpus expectation or bound verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decomp import (CompositeBase, DegreeMismatch, ExtractionFailed, decompose,
                     express_in_f, is_composite)
from .mpoly import default_names
from .parse import ExpressionSyntaxError, UnknownVariable, parse
from .ratfunc import ZeroDenominator, algebraically_dependent, jacobian_derivation
from .spectrum import ConstantInput, SliceDegenerate, SpectrumReport, spectrum, spectrum_multivar
from .corpus import run_corpus

EXIT_OK, EXIT_GAVE_UP, EXIT_INPUT, EXIT_CHECK = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PENCIL_LAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"PENCIL_LAB_SEED is not an integer: {env!r}")


def _names(args, nvars_hint: int = 2) -> list[str]:
    if args.vars:
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        if len(set(names)) != len(names) or len(names) < 2:
            raise InputError("--vars needs at least two distinct names")
        return names
    return default_names(nvars_hint)


def _fraction(text: str, args):
    f = parse(text, _names(args))
    if args.max_degree is not None and f.degree > args.max_degree:
        raise InputError(f"degree {f.degree} exceeds --max-degree {args.max_degree}")
    return f


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _report(f, args) -> SpectrumReport:
    if f.is_constant():
        raise ConstantInput("constant fraction has no pencil")
    seed = _seed(args)
    if f.nvars == 2:
        return spectrum(f, seed)
    return spectrum_multivar(f, seed, args.retry_budget)


def _report_text(rep: SpectrumReport) -> str:
    lines = [f"degree {rep.degree}, {rep.nvars} variables, composite: {str(rep.composite).lower()}"]
    for e in rep.entries:
        where = "λ = ∞" if e.infinity else f"roots of {e.poly_text()}"
        lines.append(f"  {where}: n = {e.n}, conjugates = {e.conjugacy}")
    lines.append(f"rho = {rep.rho}")
    lines.append("bounds: " + ", ".join(f"{k} {v}" for k, v in rep.bounds.items()))
    if rep.slices:
        lines.append(f"slices: {len(rep.slices)} ({rep.verification})")
    return "\n".join(lines)


def _bounds_ok(rep: SpectrumReport) -> bool:
    return "fail" not in rep.bounds.values()


def cmd_analyze(args) -> int:
    f = _fraction(args.expr, args)
    rep = _report(f, args)
    payload = rep.to_json()
    text = _report_text(rep)
    if rep.composite and f.nvars == 2:
        d = decompose(f, _seed(args), args.retry_budget)
        payload["decomposition"] = d.to_json(_names(args))
        text += f"\ndecomposition: ({d.outer.format('t')}) o {d.inner.format(_names(args))}"
    _emit(args, payload, text)
    return EXIT_OK if _bounds_ok(rep) else EXIT_CHECK


def cmd_spectrum(args) -> int:
    rep = _report(_fraction(args.expr, args), args)
    _emit(args, rep.to_json(), _report_text(rep))
    return EXIT_OK if _bounds_ok(rep) else EXIT_CHECK


def cmd_rho(args) -> int:
    rep = _report(_fraction(args.expr, args), args)
    _emit(args, {"rho": rep.rho, "seed": rep.seed}, str(rep.rho))
    return EXIT_OK if _bounds_ok(rep) else EXIT_CHECK


def cmd_composite(args) -> int:
    f = _fraction(args.expr, args)
    if f.is_constant():
        raise ConstantInput("constant fraction")
    c = is_composite(f, _seed(args))
    _emit(args, {"composite": c}, str(c).lower())
    return EXIT_OK


def cmd_decompose(args) -> int:
    f = _fraction(args.expr, args)
    if f.nvars != 2:
        raise InputError("decompose works on bivariate fractions")
    if f.is_constant():
        raise ConstantInput("constant fraction")
    d = decompose(f, _seed(args), args.retry_budget)
    if d is None:
        _emit(args, {"composite": False}, "not composite")
    else:
        names = _names(args)
        _emit(args, d.to_json(names), f"({d.outer.format('t')}) o {d.inner.format(names)}")
    return EXIT_OK


def cmd_jacobian(args) -> int:
    f, g = _fraction(args.f, args), _fraction(args.g, args)
    if f.nvars != 2:
        raise InputError("the Jacobian derivation needs exactly two variables")
    d = jacobian_derivation(f, g)
    text = d.format(_names(args))
    _emit(args, {"num": d.num.format(_names(args)), "den": d.den.format(_names(args))}, text)
    return EXIT_OK


def cmd_depend(args) -> int:
    dep = algebraically_dependent(_fraction(args.f, args), _fraction(args.g, args))
    _emit(args, {"dependent": dep}, str(dep).lower())
    return EXIT_OK


def cmd_express(args) -> int:
    g, f = _fraction(args.g, args), _fraction(args.f, args)
    if f.nvars != 2:
        raise InputError("express works on bivariate fractions")
    s = express_in_f(g, f, _seed(args))
    if s is None:
        _emit(args, {"in_kf": False}, "not in K(f)")
    else:
        _emit(args, {"in_kf": True, "num": str(s.num).replace(" ", ""),
                     "den": str(s.den).replace(" ", "")}, s.format("t"))
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(str(exc))
    results = run_corpus(lines, _seed(args), args.retry_budget, args.max_degree)
    if args.json:
        for r in results:
            print(json.dumps(r.to_json(), ensure_ascii=False))
    else:
        width = max((len(r.name) for r in results), default=4)
        for r in results:
            status = "pass" if r.ok else "FAIL"
            detail = r.error or "; ".join(r.failures)
            rho_text = "" if r.report is None else f"rho={r.report.rho}"
            print(f"{r.name:<{width}}  {status}  {rho_text}  {detail}".rstrip())
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} entries passed")
    return EXIT_OK if all(r.ok for r in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma separated variable names, in order (default x,y)")
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (falls back to $PENCIL_LAB_SEED, then 0)")
    common.add_argument("--max-degree", type=int, default=8, help="reject inputs of larger degree")
    common.add_argument("--retry-budget", type=int, default=8,
                        help="draws allowed for slices and decomposition fibers")

    parser = argparse.ArgumentParser(prog="pencil-lab",
                                     description="Spectrum and decompositions of rational functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos, h in positionals:
            p.add_argument(pos, help=h)
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "full report (plus a decomposition when composite)", ("expr", "fraction"))
    add("spectrum", cmd_spectrum, "spectrum report", ("expr", "fraction"))
    add("rho", cmd_rho, "order of reducibility", ("expr", "fraction"))
    add("composite", cmd_composite, "compositeness test", ("expr", "fraction"))
    add("decompose", cmd_decompose, "find f = r o g", ("expr", "fraction"))
    add("jacobian", cmd_jacobian, "D_f(g) = f_x g_y - f_y g_x", ("f", "fraction f"), ("g", "fraction g"))
    add("depend", cmd_depend, "algebraic dependence of f and g", ("f", "fraction f"), ("g", "fraction g"))
    add("express", cmd_express, "write g as s(f)", ("g", "fraction g"), ("f", "base fraction f"))
    add("corpus", cmd_corpus, "run a JSONL corpus", ("action", "only 'run'"), ("path", "corpus file"))
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "corpus" and args.action != "run":
        parser.error("corpus supports only the 'run' action")
    try:
        return args.func(args)
    except (ExpressionSyntaxError, UnknownVariable, ZeroDenominator, ConstantInput,
            CompositeBase, DegreeMismatch, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SliceDegenerate, ExtractionFailed) as exc:
        print(f"gave up: {exc}", file=sys.stderr)
        return EXIT_GAVE_UP


if __name__ == "__main__":
    sys.exit(main())
