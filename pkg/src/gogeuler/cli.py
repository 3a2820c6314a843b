"""Command-line entry point.

Exit codes: 0 success, 1 validation error, 2 undefined invariant requested,
3 parse error, 4 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .calculus import (
    InvalidGraph,
    accessibility_edge_bound,
    compute_invariants,
    fixed_subgroup_complexity_bound,
    torsion_free_edge_bound,
)
from .core import format_rational, parse_rational
from .decompose import amalgam_finite_index, free_product_finite_index, hnn_finite_index
from .gogfile import ParseError, load
from .graph import errors, max_finite_subgroup, validate
from .oracle.groups import build_group
from .oracle.homs import BudgetExceeded, hom_count_surface, mednykh_eval
from .oracle.subgroups import DEFAULT_BUDGET, enumerate_subgroups
from .verify import SUITES

EXIT_OK, EXIT_INVALID, EXIT_UNDEFINED, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default, which means "undefined" here
        raise UsageError(message)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_valid(path: str):
    g = load(path)
    report = validate(g)
    for v in report:
        if v.severity == "warning":
            _err(str(v))
    errs = errors(report)
    if errs:
        raise InvalidGraph("; ".join(str(v) for v in errs))
    return g


def cmd_invariants(args) -> int:
    g = _load_valid(args.file)
    rep = compute_invariants(g)
    code = EXIT_OK
    for name, value in rep.items():
        if args.only and name not in args.only:
            continue
        if value is None:
            print(f"{name} = undefined:{rep.undefined[name]}")
            if args.only:
                code = EXIT_UNDEFINED
        else:
            print(f"{name} = {format_rational(value)}")
    return code


def cmd_bounds(args) -> int:
    if (args.fixed_index is None) != (args.fixed_omega is None):
        raise UsageError("--fixed-index and --fixed-omega go together")
    fixed_omega = None
    if args.fixed_omega is not None:
        try:
            fixed_omega = parse_rational(args.fixed_omega)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    g = _load_valid(args.file)
    rep = compute_invariants(g)
    print(f"rg = {format_rational(rep.rank_gradient)}")
    norm = args.norm if args.norm is not None else max_finite_subgroup(g)
    code = EXIT_OK
    print(f"norm = {'unbounded' if norm is None else norm}")
    if norm is None:
        print("accessibility_edge_bound = undefined:largest finite subgroup order is unbounded")
        code = EXIT_UNDEFINED
    else:
        try:
            print(f"accessibility_edge_bound = {accessibility_edge_bound(norm, rep.rank_gradient)}")
        except ValueError as exc:
            print(f"accessibility_edge_bound = undefined:{exc}")
            code = EXIT_UNDEFINED
    if args.torsion_free_index is not None:
        # rank gradient is multiplicative in the index
        rg_h = args.torsion_free_index * rep.rank_gradient
        if rg_h < 0:
            print("torsion_free_edge_bound = undefined:negative rank gradient")
            code = EXIT_UNDEFINED
        else:
            print(f"torsion_free_edge_bound = {torsion_free_edge_bound(rg_h)}")
    if args.fixed_index is not None:
        bound = fixed_subgroup_complexity_bound(args.fixed_index, fixed_omega)
        print(f"fixed_subgroup_complexity_bound = {format_rational(bound)}")
    return code


def cmd_decompose(args) -> int:
    try:
        if args.kind == "free-product":
            d = free_product_finite_index(args.m, args.n, args.s)
        elif args.kind == "hnn":
            d = hnn_finite_index(args.k, args.c)
        else:
            d = amalgam_finite_index(args.n1, args.n2, args.c)
    except ValueError as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID
    print(d.format())
    if d.printed_d is not None:
        print(f"printed_d={d.printed_d}")
    return EXIT_OK


def _group(name: str):
    try:
        return build_group(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def cmd_mednykh(args) -> int:
    t = _group(args.group)
    if args.genus < 0:
        raise UsageError("genus must be >= 0")
    formula = mednykh_eval(args.genus, t)
    print(f"formula = {formula}")
    if args.brute_force:
        brute = hom_count_surface(args.genus, t)
        print(f"brute_force = {brute}")
        print("MATCH" if brute == formula else "MISMATCH")
        if brute != formula:
            return EXIT_INVALID
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ta, tb = _group(args.a), _group(args.b)
    lines = []
    for s in range(1, args.max_index + 1):
        certs = enumerate_subgroups(ta, tb, s, budget=args.budget, workers=args.workers)
        lines.extend(c.format() for c in certs)
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else list(SUITES)
    failed = 0
    for name in names:
        for check in SUITES[name]():
            print(check.line())
            failed += not check.passed
    return EXIT_OK if failed == 0 else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gogeuler", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("invariants", help="omega, rank gradient, L2-Betti, Betti volume, hom-volume")
    q.add_argument("file")
    q.add_argument("--only", nargs="+", choices=["omega", "rg", "b1l2", "vb", "vc"])
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("bounds", help="accessibility and fixed-subgroup complexity bounds")
    q.add_argument("file")
    q.add_argument("--norm", type=int, help="override the largest finite subgroup order")
    q.add_argument("--torsion-free-index", type=int, help="index of a torsion-free finite-index subgroup")
    q.add_argument("--fixed-index", type=int, help="index [G:N] of a torsion-free characteristic subgroup")
    q.add_argument("--fixed-omega", help="omega(N) as p/q")
    q.set_defaults(func=cmd_bounds)

    q = sub.add_parser("decompose", help="finite-index free-product decompositions")
    dsub = q.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    d = dsub.add_parser("free-product")
    for a in ("m", "n", "s"):
        d.add_argument(a, type=int)
    d = dsub.add_parser("hnn")
    for a in ("k", "c"):
        d.add_argument(a, type=int)
    d = dsub.add_parser("amalgam")
    for a in ("n1", "n2", "c"):
        d.add_argument(a, type=int)
    q.set_defaults(func=cmd_decompose)

    q = sub.add_parser("mednykh", help="surface-group homomorphism counts")
    q.add_argument("group")
    q.add_argument("genus", type=int)
    q.add_argument("--brute-force", action="store_true")
    q.set_defaults(func=cmd_mednykh)

    q = sub.add_parser("enumerate-subgroups", help="finite-index subgroups of A * B")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--max-index", type=int, required=True)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.add_argument("--workers", type=int, default=None)
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("verify", help="run oracle cross-check suites")
    q.add_argument("--suite", choices=sorted(SUITES))
    q.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _err(f"usage error: {exc}")
        return EXIT_PARSE
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        _err(f"cannot read input: {exc}")
        return EXIT_PARSE
    except InvalidGraph as exc:
        _err(f"invalid graph: {exc}")
        return EXIT_INVALID
    except BudgetExceeded as exc:
        _err(f"budget exceeded: {exc}")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
