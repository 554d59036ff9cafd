"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 domain error, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import checks, cohom
from .contact import OSP_HAMILTONIANS, OSP_NAMES, Density, WeightMismatch, contact_bracket, poisson_bracket
from .diffop import DiffOperator, ZeroOperator, apply, conjugate, format_operator, lie_action
from .equivcalc import (
    BetaTable,
    Family,
    NoSymbolMap,
    ResonanceError,
    SymbolVector,
    Unique,
    quantization_map,
    solve_betas,
    symbol_map,
)
from .expr import NotAFunction, ParseError, parse_function, parse_operator
from .superring import Poly, SuperFunction, format_rational, format_superfunction

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2, 3

DOMAIN_ERRORS = (
    ResonanceError,
    WeightMismatch,
    ZeroOperator,
    NotAFunction,
    cohom.EvenOrder,
    cohom.NotResonant,
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# --- JSON encoding ----------------------------------------------------------------


def rat(q: Fraction) -> str:
    return format_rational(q)


def parse_rational(text: str) -> Fraction:
    try:
        num, _, den = text.strip().partition("/")
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise CliError(f"not a rational number: {text!r} (use p or p/q)", EXIT_PARSE) from None


def function_json(f: SuperFunction) -> dict[str, list[str]]:
    return {"even": [rat(c) for c in f.even.coeffs], "odd": [rat(c) for c in f.odd.coeffs]}


def function_from_json(data: dict) -> SuperFunction:
    return SuperFunction(
        Poly(parse_rational(c) for c in data["even"]), Poly(parse_rational(c) for c in data["odd"])
    )


def operator_json(A: DiffOperator) -> dict[str, Any]:
    return {
        "lambda": rat(A.src),
        "mu": rat(A.dst),
        "coeffs": [function_json(c) for c in A.coeffs],
        "text": format_operator(A),
    }


def operator_from_json(data: dict) -> DiffOperator:
    return DiffOperator(
        parse_rational(data["lambda"]),
        parse_rational(data["mu"]),
        [function_from_json(c) for c in data["coeffs"]],
    )


def density_json(phi: Density) -> dict[str, Any]:
    return {"weight": rat(phi.weight), **function_json(phi.fn), "text": format_superfunction(phi.fn)}


def symbol_json(S: SymbolVector) -> dict[str, Any]:
    return {
        "delta": rat(S.delta),
        "parts": [
            {"index": j, "weight": rat(S.weight(j)), **function_json(f), "text": format_superfunction(f)}
            for j, f in enumerate(S.parts)
        ],
    }


def table_json(table: BetaTable) -> list[dict[str, Any]]:
    rows = []
    for k in range(table.k_max + 1):
        for n in range(k + 1):
            rows.append({"k": k, "n": n, "beta": rat(table[k, n])})
    return rows


# --- text rendering -------------------------------------------------------------------


def operator_text(A: DiffOperator) -> str:
    return f"{format_operator(A)}    [{rat(A.src)} -> {rat(A.dst)}]"


def symbol_text(S: SymbolVector) -> str:
    lines = [f"delta = {rat(S.delta)}"]
    for j, f in enumerate(S.parts):
        lines.append(f"  [{j}] weight {rat(S.weight(j))}: {format_superfunction(f)}")
    return "\n".join(lines)


def table_text(table: BetaTable) -> str:
    return "\n".join(
        f"  beta^{k}_{n} = {rat(table[k, n])}" for k in range(table.k_max + 1) for n in range(k + 1)
    )


# --- commands -------------------------------------------------------------------------
# Each returns (text, data, exit_code).


def cmd_symbolize(args):
    A = parse_operator(args.op, args.lam, args.mu)
    S = symbol_map(A)
    return symbol_text(S), {"operator": operator_json(A), "symbol": symbol_json(S)}, EXIT_OK


def _parse_symbol_list(text: str, delta: Fraction) -> SymbolVector:
    densities = []
    for item in text.split(","):
        expr, sep, weight = item.rpartition("@")
        if not sep:
            raise CliError(f"density {item.strip()!r} needs the form EXPR@WEIGHT", EXIT_PARSE)
        densities.append(Density(parse_function(expr), parse_rational(weight)))
    weights = [phi.weight for phi in densities]
    if weights != sorted(weights, reverse=True):
        raise WeightMismatch("symbol weights must be listed in descending order")
    return SymbolVector.from_densities(delta, densities)


def cmd_quantize(args):
    S = _parse_symbol_list(args.symbol, args.mu - args.lam)
    A = quantization_map(S, args.lam, args.mu)
    return operator_text(A), {"symbol": symbol_json(S), "operator": operator_json(A)}, EXIT_OK


def cmd_apply(args):
    A = parse_operator(args.op, args.lam, args.mu)
    phi = Density(parse_function(args.to), args.lam)
    out = apply(A, phi)
    text = f"{format_superfunction(out.fn)}    [weight {rat(out.weight)}]"
    return text, {"operator": operator_json(A), "result": density_json(out)}, EXIT_OK


def cmd_bracket(args):
    f, g = parse_function(args.f), parse_function(args.g)
    if args.lam is None and args.mu is None:
        out = contact_bracket(f, g)
        return format_superfunction(out), {"kind": "contact", "result": function_json(out)}, EXIT_OK
    if args.lam is None or args.mu is None:
        raise CliError("--lambda and --mu must be given together", EXIT_DOMAIN)
    out = poisson_bracket(Density(f, args.lam), Density(g, args.mu))
    text = f"{format_superfunction(out.fn)}    [weight {rat(out.weight)}]"
    return text, {"kind": "poisson", "result": density_json(out)}, EXIT_OK


def cmd_action(args):
    h = parse_function(args.hamiltonian)
    A = parse_operator(args.op, args.lam, args.mu)
    out = lie_action(h, A)
    return operator_text(out), {"operator": operator_json(A), "result": operator_json(out)}, EXIT_OK


def cmd_conjugate(args):
    A = parse_operator(args.op, args.lam, args.mu)
    out = conjugate(A)
    return operator_text(out), {"operator": operator_json(A), "result": operator_json(out)}, EXIT_OK


def cmd_solve_betas(args):
    try:
        result = solve_betas(args.kmax, args.lam, args.mu)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    data: dict[str, Any] = {"lambda": rat(args.lam), "mu": rat(args.mu), "kmax": args.kmax}
    if isinstance(result, Unique):
        data.update(kind="Unique", table=table_json(result.table))
        text = f"Unique\n{table_text(result.table)}"
    elif isinstance(result, Family):
        data.update(kind="Family", dimension=result.dimension, particular=table_json(result.particular))
        text = f"{result}\nparticular solution (free parameters 0):\n{table_text(result.particular)}"
    else:
        assert isinstance(result, NoSymbolMap)
        data.update(kind="NoSymbolMap", order=result.order)
        text = str(result)
    return text, data, EXIT_OK


def cmd_cocycle(args):
    if args.hamiltonian is not None:
        h = parse_function(args.hamiltonian)
        try:
            value = cohom.gamma_cocycle(args.k, h)
        except ValueError as exc:  # even k, or h outside osp(1|2)
            raise CliError(str(exc), EXIT_DOMAIN) from None
        pairs = [(format_superfunction(h), value)]
    else:
        pairs = [(name, cohom.gamma_cocycle(args.k, h)) for name, h in zip(OSP_NAMES, OSP_HAMILTONIANS)]
    text = "\n".join(f"gamma_{args.k}(X_{name}) = {format_operator(v)}" for name, v in pairs)
    data = {"k": args.k, "values": [{"hamiltonian": name, "value": operator_json(v)} for name, v in pairs]}
    return text, data, EXIT_OK


def cmd_bol(args):
    B = cohom.bol_operator(args.k)
    report = [(name, lie_action(h, B)) for name, h in zip(OSP_NAMES, OSP_HAMILTONIANS)]
    invariant = all(v.is_zero() for _, v in report)
    lines = [operator_text(B)]
    lines += [f"  L_(X_{name})(Dbar^{args.k}) = {format_operator(v)}" for name, v in report]
    lines.append("invariant" if invariant else "NOT invariant")
    data = {
        "k": args.k,
        "operator": operator_json(B),
        "invariant": invariant,
        "actions": {name: operator_json(v) for name, v in report},
    }
    return "\n".join(lines), data, EXIT_OK if invariant else EXIT_VERIFY


def cmd_check(args):
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in checks.SUITES for n in names):
        raise CliError(f"unknown suite {args.suite!r}; choose from all, {', '.join(checks.SUITES)}", EXIT_DOMAIN)
    results = [checks.run_suite(n) for n in names]
    lines = []
    for r in results:
        lines.append(r.summary())
        lines += [f"    {f}" for f in r.failures]
    data = {
        "suites": [
            {"name": r.name, "passed": r.passed, "count": r.count, "failed": r.failed, "failures": r.failures}
            for r in results
        ]
    }
    ok = all(r.passed for r in results)
    return "\n".join(lines), data, EXIT_OK if ok else EXIT_VERIFY


# --- argument parsing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--json-out", metavar="FILE", help="also write the JSON result to FILE")

    def weights(p, required=True):
        p.add_argument("--lambda", dest="lam", type=str, required=required, help="source weight p or p/q")
        p.add_argument("--mu", dest="mu", type=str, required=required, help="target weight p or p/q")

    parser = argparse.ArgumentParser(
        prog="supercircle",
        description="Exact calculus of differential operators on the supercircle S^{1|1}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("symbolize", parents=[common], help="equivariant symbol of an operator")
    weights(p)
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_symbolize)

    p = sub.add_parser("quantize", parents=[common], help="operator from a symbol")
    weights(p)
    p.add_argument("--symbol", required=True, help='comma-separated "EXPR@WEIGHT" list')
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a density")
    weights(p)
    p.add_argument("--op", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("bracket", parents=[common], help="contact bracket, or Poisson bracket of densities")
    weights(p, required=False)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("action", parents=[common], help="Lie derivative of an operator along X_h")
    weights(p)
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("conjugate", parents=[common], help="adjoint operator")
    weights(p)
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("solve-betas", parents=[common], help="solve for symbol-map coefficients")
    weights(p)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_solve_betas)

    p = sub.add_parser("cocycle", parents=[common], help="values of the cocycle gamma_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--hamiltonian")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("bol", parents=[common], help="Bol operator and its invariance")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bol)

    p = sub.add_parser("check", parents=[common], help="run a named invariant suite")
    p.add_argument("--suite", required=True, help=f"one of: all, {', '.join(checks.SUITES)}")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        for name in ("lam", "mu"):
            if getattr(args, name, None) is not None:
                setattr(args, name, parse_rational(getattr(args, name)))
        text, data, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    payload = json.dumps(data, indent=2)
    print(payload if args.json else text)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
