"""Command-line front end.

Commands: derive, compose, mul, dpow, convert, integrate, check.  The theory
is chosen with --theory {poly|power|divided|zinbiel|trivial}, the field with
--field {Q|F<p>}, the series cap with --cap.  Expressions follow the grammar
in the syntax module; morphisms can be given as @file.json holding
{"arity": n, "components": ["expr", ...]}.

Exit codes: 0 on success (and all axioms passing), 1 when an axiom check
fails, 2 on usage, parse, or shape errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cdc
from .errors import DiffmonadError
from .generators import GenConfig
from .scalars import prime_field, rationals
from .syntax import format_element, parse_element
from .zinbiel import divided_to_zinbiel, integral_candidate


def _field_from_flag(text: str):
    if text == "Q":
        return rationals()
    m = re.fullmatch(r"F(\d+)", text)
    if m is None:
        raise DiffmonadError(f"unknown field {text!r}; use Q or F<p>")
    return prime_field(int(m.group(1)))


def _theory_from_args(args, default: str = "power") -> cdc.Theory:
    kind = args.theory or default
    return cdc.make_theory(kind, _field_from_flag(args.field), args.cap)


def _require_theory(args, allowed: str) -> None:
    if args.theory is not None and args.theory != allowed:
        raise DiffmonadError(f"this command only works with --theory {allowed}")


def _infer_shape(exprs: list[str]) -> tuple[int, int]:
    """(arity, base block size) from the variable tokens of expressions."""
    base = 0
    max_q = 0
    for text in exprs:
        for m in re.finditer(r"(d*)x(\d+)", text):
            base = max(base, int(m.group(2)))
            max_q = max(max_q, len(m.group(1)))
    if base == 0:
        raise DiffmonadError("no variables found; cannot infer the arity")
    return base * (max_q + 1), base


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load_components(parts: list[str]) -> tuple[list[str], int | None]:
    """Expression strings from argv pieces; @file pulls a JSON morphism."""
    exprs: list[str] = []
    declared: int | None = None
    for part in parts:
        if part.startswith("@"):
            with open(part[1:], "r", encoding="utf-8") as fh:
                data = json.load(fh)
            exprs.extend(data["components"])
            declared = int(data["arity"])
        else:
            exprs.extend(p for p in part.split(",") if p.strip())
    return exprs, declared


def _cmd_derive(args) -> int:
    theory = _theory_from_args(args)
    arity = args.arity
    if arity is None:
        arity, _ = _infer_shape([args.expr])
    elem = parse_element(args.expr, theory, arity)
    rendered = format_element(theory.partial(elem), base_arity=arity)
    _emit(args, {"result": rendered, "arity": 2 * arity, "base_arity": arity},
          rendered)
    return 0


def _cmd_compose(args) -> int:
    theory = _theory_from_args(args)
    if "/" not in args.parts:
        raise DiffmonadError("compose expects: OUTER / INNER[,INNER...]")
    split = args.parts.index("/")
    outer_exprs, outer_declared = _load_components(args.parts[:split])
    inner_exprs, inner_declared = _load_components(args.parts[split + 1:])
    if not outer_exprs or not inner_exprs:
        raise DiffmonadError("compose needs both an outer and an inner morphism")
    inner_arity = args.arity or inner_declared
    if inner_arity is None:
        inner_arity, _ = _infer_shape(inner_exprs)
    outer_arity = outer_declared or len(inner_exprs)
    if outer_arity != len(inner_exprs):
        raise DiffmonadError(f"outer morphism needs {outer_arity} inner "
                             f"components, got {len(inner_exprs)}")
    outer = cdc.Morphism(theory, outer_arity, len(outer_exprs),
                         [parse_element(e, theory, outer_arity)
                          for e in outer_exprs])
    inner = cdc.Morphism(theory, inner_arity, len(inner_exprs),
                         [parse_element(e, theory, inner_arity)
                          for e in inner_exprs])
    result = cdc.compose(outer, inner)
    rendered = [format_element(c, base_arity=inner_arity)
                for c in result.components]
    _emit(args, {"arity": inner_arity, "components": rendered},
          "\n".join(rendered))
    return 0


def _cmd_mul(args) -> int:
    theory = _theory_from_args(args)
    if theory.kind == "trivial":
        raise DiffmonadError("the trivial theory has no product")
    arity = args.arity
    if arity is None:
        arity, _ = _infer_shape([args.left, args.right])
    a = parse_element(args.left, theory, arity)
    b = parse_element(args.right, theory, arity)
    rendered = format_element(a * b, base_arity=arity)
    _emit(args, {"result": rendered, "arity": arity}, rendered)
    return 0


def _cmd_dpow(args) -> int:
    _require_theory(args, "divided")
    theory = _theory_from_args(args, default="divided")
    arity = args.arity
    if arity is None:
        arity, _ = _infer_shape([args.expr])
    elem = parse_element(args.expr, theory, arity)
    rendered = format_element(elem.divided_power(args.n), base_arity=arity)
    _emit(args, {"result": rendered, "arity": arity}, rendered)
    return 0


def _cmd_convert(args) -> int:
    _require_theory(args, "divided")
    divided = cdc.make_theory("dividedpower", _field_from_flag(args.field))
    arity = args.arity
    if arity is None:
        arity, _ = _infer_shape([args.expr])
    elem = parse_element(args.expr, divided, arity)
    rendered = format_element(divided_to_zinbiel(elem), base_arity=arity)
    _emit(args, {"result": rendered, "arity": arity}, rendered)
    return 0


def _cmd_integrate(args) -> int:
    _require_theory(args, "zinbiel")
    theory = cdc.make_theory("zinbiel", _field_from_flag(args.field))
    if args.arity is not None:
        base = args.arity
        arity = 2 * base
    else:
        arity, base = _infer_shape([args.expr])
        if arity == base:
            arity = 2 * base  # plain x-words still live over a doubled block
    elem = parse_element(args.expr, theory, arity, base_arity=base)
    rendered = format_element(integral_candidate(elem), base_arity=base)
    _emit(args, {"result": rendered, "arity": base}, rendered)
    return 0


def _cmd_check(args) -> int:
    theory = _theory_from_args(args)
    cfg = GenConfig(seed=args.seed)
    ids = cdc.axiom_ids()
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(cdc.run_axiom, a, theory, cfg, args.trials)
                       for a in ids]
            reports = [f.result() for f in futures]
    else:
        reports = [cdc.run_axiom(a, theory, cfg, args.trials) for a in ids]
    ok = all(r.passed for r in reports)
    if args.json:
        payload = {
            "theory": theory.name,
            "field": repr(theory.field),
            "cap": theory.cap,
            "seed": args.seed,
            "trials": args.trials,
            "passed": ok,
            "reports": [r.to_json(include_millis=args.timing)
                        for r in reports],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "pass" if r.passed else f"FAIL ({len(r.failures)})"
            print(f"{r.axiom:<18} trials={r.trials} {status} [{r.millis} ms]")
        print(f"{'all axioms pass' if ok else 'AXIOM FAILURES'} for "
              f"{theory.name} over {theory.field!r}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", default=None,
                        choices=["poly", "power", "divided", "zinbiel",
                                 "trivial"])
    common.add_argument("--field", default="Q", help="Q or F<p>")
    common.add_argument("--cap", type=int, default=6,
                        help="degree cap for power series")
    common.add_argument("--arity", type=int, default=None,
                        help="number of variables (inferred when omitted)")
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(
        prog="diffmonads",
        description="Exact computations and axiom checks for differential "
                    "theories of power series, divided powers, and words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common],
                       help="apply the differential combinator")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("compose", parents=[common],
                       help="substitute: OUTER / INNER[,INNER...]")
    p.add_argument("parts", nargs="+")
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("mul", parents=[common],
                       help="product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_mul)

    p = sub.add_parser("dpow", parents=[common],
                       help="divided power f^[n]")
    p.add_argument("expr")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_dpow)

    p = sub.add_parser("convert", parents=[common],
                       help="expand divided powers into words")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("integrate", parents=[common],
                       help="experimental block folding for words")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_integrate)

    p = sub.add_parser("check", parents=[common],
                       help="run every axiom suite for one theory")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1,
                   help="thread count; output is identical for any value")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock millis in JSON output")
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except DiffmonadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
