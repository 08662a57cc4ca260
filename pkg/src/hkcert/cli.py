"""Command-line interface.

Every command prints exact rationals alongside truncated decimals and
exits 0 exactly when all requested comparisons pass.  Rational arguments
accept both "p/q" and decimal literals; decimals parse exactly ("3.32"
means 83/25).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .bounds import (
    certify_interval,
    fixed_dimension_bound,
    optimize_slice,
    quadric_ehk,
    radical_recursion_bound,
    RadicalParams,
    volume_lower_bound,
)
from .monomial import ehk_estimate, load_ideal
from .rationals import decimal_render, format_rational, parse_rational
from .series import conjecture_threshold, secant_tangent_coeffs
from .slab import vol_slab
from .tables import verify_tables

DIGITS = 4


def _fmt(x: Fraction) -> str:
    return f"{format_rational(x)} ≈ {decimal_render(x, DIGITS)}"


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkcert",
        description="Exact-rational lower bounds for Hilbert-Kunz multiplicities.",
    )
    parser.add_argument("--version", action="version", version=f"hkcert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vol", help="exact hypercube slab volume v_s")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--s", type=_rational, required=True)

    p = sub.add_parser("md", help="series coefficients m_d and thresholds 1 + m_d")
    p.add_argument("--max", type=int, required=True, dest="max_order")

    p = sub.add_parser("bound", help="volume lower bound e (v_s - sum v_{s-t_i})")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--e", type=_rational, required=True)
    gens = p.add_mutually_exclusive_group(required=True)
    gens.add_argument("--r", type=int, help="uniform generator count (all valuations 1)")
    gens.add_argument("--t", type=_rational_list, help="comma-separated valuations t_1,..,t_r")
    slice_group = p.add_mutually_exclusive_group(required=True)
    slice_group.add_argument("--s", type=_rational, help="slice parameter")
    slice_group.add_argument("--optimize", action="store_true", help="search for the best slice")
    p.add_argument("--resolution", type=int, default=100, help="grid resolution for --optimize")
    p.add_argument("--target", type=_rational, help="pass/fail threshold for the bound")

    p = sub.add_parser("optimize", help="grid search for the best slice parameter")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--e", type=_rational, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--resolution", type=int, default=100)

    p = sub.add_parser("verify-tables", help="recompute a bundled certification table")
    p.add_argument("--dim", type=int, choices=(5, 6), required=True)
    p.add_argument("--csv", type=Path, help="also write the rows as CSV to this path")

    p = sub.add_parser("quadric", help="closed-form e_HK of the quadric hypersurface")
    p.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    p.add_argument("--d", type=int, choices=(5, 6), required=True)

    p = sub.add_parser("radical", help="radical-extension lower bounds")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--e", type=_rational, default=Fraction(6))
    p.add_argument("--case", choices=("minimal_gap", "general"), help="closed-form case")
    p.add_argument("--k", type=int, help="embedding codimension (recursion mode)")
    p.add_argument("--n", type=int, help="root degree (recursion mode)")
    p.add_argument("--b", type=int, help="field-extension degree, defaults to n")
    p.add_argument("--iterations", type=int, help="recursion depth (recursion mode)")

    p = sub.add_parser("monomial", help="Frobenius colengths of a monomial ideal")
    p.add_argument("--file", type=Path, required=True, help="one generator per line, space-separated exponents")
    p.add_argument("--q", type=_int_list, required=True, help="comma-separated Frobenius powers")

    p = sub.add_parser("certify-interval", help="certify G(e) >= target over an integer interval")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--e-low", type=int, required=True)
    p.add_argument("--e-high", type=int, required=True)
    p.add_argument("--s", type=_rational, required=True)
    p.add_argument("--target", type=_rational, required=True)

    return parser


def _print_target(bound: Fraction, target: Optional[Fraction]) -> bool:
    if target is None:
        return True
    passed = bound >= target
    print(f"target: {format_rational(target)} -> {'PASS' if passed else 'FAIL'}")
    return passed


def _cmd_vol(args: argparse.Namespace) -> int:
    print(_fmt(vol_slab(args.dim, args.s)))
    return 0


def _cmd_md(args: argparse.Namespace) -> int:
    coeffs = secant_tangent_coeffs(args.max_order)
    for d in range(1, args.max_order + 1):
        m = coeffs.coefficient(d)
        threshold = coeffs.threshold(d)
        print(f"{d}\t{format_rational(m)}\t{format_rational(threshold)}\t{decimal_render(threshold, DIGITS)}")
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.optimize:
        if args.t is not None:
            raise SystemExit("--optimize supports only the uniform --r form")
        s, bound = optimize_slice(args.dim, args.e, args.r, args.resolution)
        print(f"s: {format_rational(s)}")
    else:
        bound = volume_lower_bound(args.dim, args.e, args.s, r=args.r, valuations=args.t)
    print(f"bound: {_fmt(bound)}")
    return 0 if _print_target(bound, args.target) else 1


def _cmd_optimize(args: argparse.Namespace) -> int:
    s, bound = optimize_slice(args.dim, args.e, args.r, args.resolution)
    print(f"s: {format_rational(s)}")
    print(f"bound: {_fmt(bound)}")
    return 0


def _cmd_verify_tables(args: argparse.Namespace) -> int:
    report = verify_tables(args.dim)
    sys.stdout.write(report.to_text())
    if args.csv is not None:
        args.csv.write_text(report.to_csv())
    return 0 if report.overall_pass else 1


def _cmd_quadric(args: argparse.Namespace) -> int:
    value = quadric_ehk(args.p, args.d)
    threshold = conjecture_threshold(args.d)
    exceeds = value > threshold
    print(f"{_fmt(value)}; exceeds {format_rational(threshold)}: {'yes' if exceeds else 'no'}")
    return 0 if exceeds else 1


def _cmd_radical(args: argparse.Namespace) -> int:
    recursion_flags = (args.k, args.n, args.iterations)
    if args.case is not None:
        if any(flag is not None for flag in recursion_flags) or args.b is not None:
            raise SystemExit("--case and recursion flags (--k/--n/--b/--iterations) are mutually exclusive")
        bound = fixed_dimension_bound(args.dim, args.e, args.case)
    elif all(flag is not None for flag in recursion_flags):
        params = RadicalParams(
            dimension=args.dim,
            multiplicity=args.e,
            codimension=args.k,
            root_degree=args.n,
            iterations=args.iterations,
            field_degree=args.b,
        )
        bound = radical_recursion_bound(params)
    else:
        raise SystemExit("give either --case, or all of --k --n --iterations")
    print(f"bound: {_fmt(bound)}")
    return 0


def _cmd_monomial(args: argparse.Namespace) -> int:
    ideal = load_ideal(args.file)
    sequence = ehk_estimate(ideal, args.q)
    print(f"variables: {ideal.num_vars}")
    print("generators: " + " / ".join(" ".join(str(c) for c in g) for g in ideal.generators))
    for entry in sequence.entries:
        print(f"q={entry.q}\tcolength={entry.colength}\tnormalized={_fmt(entry.normalized)}")
    return 0


def _cmd_certify_interval(args: argparse.Namespace) -> int:
    row = certify_interval(args.dim, args.e_low, args.e_high, args.s, args.target)
    print(f"interval: [{row.e_low}, {row.e_high}]")
    print(f"s: {format_rational(row.s)}")
    print(f"apex: {'-' if row.apex is None else _fmt(row.apex)}")
    print(f"branch: {row.branch}")
    print(f"certified-bound: {_fmt(row.certified_bound)}")
    print(f"notes: {row.notes}")
    return 0 if _print_target(row.certified_bound, row.target) else 1


_HANDLERS = {
    "vol": _cmd_vol,
    "md": _cmd_md,
    "bound": _cmd_bound,
    "optimize": _cmd_optimize,
    "verify-tables": _cmd_verify_tables,
    "quadric": _cmd_quadric,
    "radical": _cmd_radical,
    "monomial": _cmd_monomial,
    "certify-interval": _cmd_certify_interval,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
