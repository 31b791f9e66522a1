"""Command-line entry point: ``maxwiener <subcommand> ...``.

Exit status is 2 for bad input, 1 for a failed audit or internal
cross-check, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import __version__
from .audit import audit_sweep, reproduce_example_1_3
from .bounds import upper_bound
from .caterpillar import build_caterpillar, caterpillar_wiener, f_value, parse_spine_weights
from .errors import InstanceTooLarge, MaxWienerError
from .graph import DegreeSequence, read_tree, validate_degree_sequence, wiener_edgecut, wiener_pairwise
from .solvers import CLOSED_FORM_MAX_K, DEFAULT_VALLEY_CAP, greedy_caterpillar, solve


class InputError(Exception):
    pass


def parse_degrees(text: str) -> DegreeSequence:
    """Parse ``"13,5,5,5,4,3,1x25"``: comma-separated ``INT`` or ``INTxCOUNT`` tokens."""
    degrees: list[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            raise InputError(f"empty token in degree list {text!r}")
        value, sep, count = tok.lower().partition("x")
        try:
            d = int(value)
            c = int(count) if sep else 1
        except ValueError:
            raise InputError(f"bad degree token {tok!r}; expected INT or INTxCOUNT") from None
        if c < 0:
            raise InputError(f"negative repeat count in {tok!r}")
        degrees.extend([d] * c)
    return validate_degree_sequence(degrees)


def parse_int_list(text: str) -> list[int]:
    """Parse ``"2,3,5-7"`` into ``[2, 3, 5, 6, 7]``."""
    out: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        lo, sep, hi = tok.partition("-")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(tok)])
        except ValueError:
            raise InputError(f"bad integer list {text!r}") from None
    return out


def _text_lines(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            lines.extend(_text_lines(obj[key], f"{prefix}.{key}" if prefix else key))
        return lines
    if isinstance(obj, list) and obj and all(isinstance(v, dict) for v in obj):
        return [f"{prefix}[{i}]: {json.dumps(v, sort_keys=True)}" for i, v in enumerate(obj)]
    value = json.dumps(obj) if isinstance(obj, (list, bool)) or obj is None else str(obj)
    return [f"{prefix}: {value}"]


def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(_text_lines(payload)))


def _cmd_wiener(args) -> int:
    if args.tree is not None:
        t = read_tree(args.tree)
        pair, cut = wiener_pairwise(t), wiener_edgecut(t)
        payload = {"source": "tree", "n": t.n, "wiener_pairwise": pair, "wiener_edgecut": cut, "agree": pair == cut}
    else:
        y = parse_spine_weights(args.caterpillar)
        t = build_caterpillar(y)
        formula, pair = caterpillar_wiener(y), wiener_pairwise(t)
        payload = {
            "source": "caterpillar",
            "spine": list(y),
            "n": t.n,
            "f": f_value(y),
            "wiener_formula": formula,
            "wiener_pairwise": pair,
            "agree": formula == pair,
        }
    emit(payload, args.format)
    if not payload["agree"]:
        print("error: Wiener computations disagree (internal bug)", file=sys.stderr)
        return 1
    return 0


def _solve_kwargs(args) -> dict:
    return {"oracle_cap": args.oracle_cap, "valley_cap": args.valley_cap, "closed_max_k": args.closed_max_k}


def _cmd_maximize(args) -> int:
    d = parse_degrees(args.degrees)
    res = solve(d, args.method, **_solve_kwargs(args))
    emit({"degrees": list(d.degrees), "k": d.k, **res.to_dict()}, args.format)
    return 0


def _cmd_greedy(args) -> int:
    d = parse_degrees(args.degrees)
    y = greedy_caterpillar(d)
    w = caterpillar_wiener(y)
    try:
        best = solve(d, "auto", **_solve_kwargs(args)).w_star
    except InstanceTooLarge:
        best = None
    status = "UNKNOWN" if best is None else ("SUBOPTIMAL" if w < best else "OPTIMAL")
    payload = {
        "degrees": list(d.degrees),
        "k": d.k,
        "greedy_spine": list(y),
        "f": f_value(y),
        "wiener": w,
        "optimal_wiener": best,
        "status": status,
    }
    emit(payload, args.format)
    return 0


def _cmd_bound(args) -> int:
    d = parse_degrees(args.degrees)
    emit({"degrees": list(d.degrees), **upper_bound(d).to_dict()}, args.format)
    return 0


def _cmd_audit(args) -> int:
    report = audit_sweep(
        parse_int_list(args.k),
        args.wmax,
        oracle_cap=args.oracle_cap,
        trees=args.trees,
        workers=args.workers,
    )
    emit(report.to_dict(), args.format)
    return 1 if report.hard_failures else 0


def _cmd_example13(args) -> int:
    report = reproduce_example_1_3()
    emit(report.to_dict(), args.format)
    return 0 if report.details["ok"] and not report.hard_failures else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="output format (default: text)")

    solver_opts = argparse.ArgumentParser(add_help=False)
    solver_opts.add_argument("--oracle-cap", type=int, default=None, help="max k for exhaustive search (default: $WIENER_ORACLE_CAP or 9)")
    solver_opts.add_argument("--valley-cap", type=int, default=DEFAULT_VALLEY_CAP, help="max k for the valley search in auto mode")
    solver_opts.add_argument("--closed-max-k", type=int, default=CLOSED_FORM_MAX_K, help="max k for closed forms in auto mode")

    parser = argparse.ArgumentParser(prog="maxwiener", description="Maximum Wiener index of trees with a given degree sequence.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("wiener", parents=[common], help="Wiener index of a tree file or a caterpillar")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--tree", metavar="FILE", help="tree file: 'n' then one 'u v' edge per line")
    src.add_argument("--caterpillar", metavar="Y", help="spine weights, e.g. 12,2,3,4,4,4")
    p.set_defaults(func=_cmd_wiener)

    p = sub.add_parser("maximize", parents=[common, solver_opts], help="maximum Wiener index for a degree sequence")
    p.add_argument("--degrees", required=True, metavar="SEQ", help="e.g. 13,5,5,5,4,3,1x25")
    p.add_argument("--method", choices=["auto", "oracle", "valley", "closed"], default="auto")
    p.set_defaults(func=_cmd_maximize)

    p = sub.add_parser("greedy", parents=[common, solver_opts], help="greedy caterpillar and how it compares to the optimum")
    p.add_argument("--degrees", required=True, metavar="SEQ")
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("bound", parents=[common], help="degree-based upper bound")
    p.add_argument("--degrees", required=True, metavar="SEQ")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("audit", parents=[common], help="compare every claim with exhaustive search")
    p.add_argument("--k", required=True, metavar="LIST", help="internal-vertex counts, e.g. 2,3,4 or 2-6")
    p.add_argument("--wmax", required=True, type=int, metavar="N", help="largest weight d_i - 1 in the sweep")
    p.add_argument("--trees", action="store_true", help="also enumerate all labelled trees for instances with n <= 10")
    p.add_argument("--oracle-cap", type=int, default=None)
    p.add_argument("--workers", type=int, default=1, help="worker processes for the sweep")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("example13", parents=[common], help="rebuild the 31-vertex greedy counterexample")
    p.set_defaults(func=_cmd_example13)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, MaxWienerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
