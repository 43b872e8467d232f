"""Command-line front end: ``gkcodes <command> ...`` or ``python3 -m gkcodes``."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from gkcodes.codes import apply_matthews, build_CL, build_COmega, export_matrix, shorten
from gkcodes.curve import curve_create
from gkcodes.errors import GKCodesError
from gkcodes.rrspace import ell
from gkcodes.search import SearchSpec, expand_by_shortening, records_to_json, search_matthews
from gkcodes.semigroup import TwoPointSemigroup, gamma_closed_form, membership_box
from gkcodes.verify import run_verify


def _grid_csv(grid: np.ndarray) -> str:
    return "\n".join(",".join("1" if v else "0" for v in row) for row in grid)


def cmd_points(args) -> tuple[str, object]:
    C = curve_create(args.n)
    enc = C.affine_points_encoded()
    lines = ["kind,a,b,c", "infinity,,,"]
    lines += [f"affine,{a},{b},{c}" for a, b, c in enc.tolist()]
    result = {"count": len(enc) + 1, "points": [["infinity", None, None, None]] + [["affine", *p] for p in enc.tolist()]}
    return "\n".join(lines), result


def cmd_gamma(args) -> tuple[str, object]:
    pairs = sorted(gamma_closed_form(curve_create(args.n)).pairs)
    return "\n".join(f"{a},{b}" for a, b in pairs), [list(p) for p in pairs]


def cmd_box(args) -> tuple[str, object]:
    T = TwoPointSemigroup.for_curve(curve_create(args.n))
    grid = membership_box(T, args.bound)
    return _grid_csv(grid), grid.astype(int).tolist()


def cmd_ell(args) -> tuple[str, object]:
    a1 = args.a1 if args.a1 is not None else args.pos_a1
    a2 = args.a2 if args.a2 is not None else args.pos_a2
    if a1 is None or a2 is None:
        raise _Usage("ell needs a1 and a2")
    args.a1, args.a2 = a1, a2
    del args.pos_a1, args.pos_a2
    value = ell(curve_create(args.n), (a1, a2))
    return str(value), value


def cmd_code(args) -> tuple[str, object]:
    C = curve_create(args.n)
    G = (args.a1, args.a2)
    matthews = [args.ma1, args.ma2, args.mb1, args.mb2]
    if any(v is not None for v in matthews):
        if any(v is None for v in matthews):
            raise _Usage("--ma1 --ma2 --mb1 --mb2 must be given together")
        if not args.dual:
            raise _Usage("the improved bound applies to --dual codes only")
    code = build_COmega(C, G) if args.dual else build_CL(C, G)
    if matthews[0] is not None:
        T = TwoPointSemigroup.for_curve(C)
        code = apply_matthews(code, T, (args.ma1, args.ma2), (args.mb1, args.mb2), curve=C,
                              orientation=args.orientation)
    if args.shorten:
        code = shorten(code, args.shorten)
    if args.export:
        export_matrix(code, args.export)
    n, k, d = code.params
    result = {"n": n, "k": k, "d_bound": d, "kind": code.distance_bound.kind,
              "certificate": list(code.distance_bound.parameters)}
    return str(code), result


def cmd_search(args) -> tuple[str, object]:
    spec = SearchSpec(args.n, args.deg_min, args.deg_max, orientation=args.orientation)
    records = search_matthews(spec, dedupe=not args.all, threads=args.threads)
    if args.shorten:
        records = expand_by_shortening(records, args.shorten)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(records_to_json(records) + "\n")
    lines = [str(r) + (f"  vs one-point {r.comparator.params}" if r.comparator else "") for r in records]
    return "\n".join(lines), [r.as_json() for r in records]


def cmd_verify(args) -> tuple[str, object]:
    report = run_verify(args.n, slow=args.slow)
    args._status = 0 if report.overall else 1
    return report.render(), report.as_json()


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gkcodes", description="Two-point AG codes on GK curves.")
    parser.add_argument("--json", action="store_true", help="wrap output in a JSON envelope")
    parser.add_argument("--threads", type=int, default=1, help="worker cap (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--n", type=int, required=True)
        return p

    with_n("points", help="rational points as CSV kind,a,b,c").set_defaults(func=cmd_points)
    with_n("gamma", help="minimal generating set of H(P0, P_inf)").set_defaults(func=cmd_gamma)
    for name in ("box", "semigroup-box"):
        p = with_n(name, help="0/1 membership grid on [0, bound]^2")
        p.add_argument("--bound", type=int, required=True)
        p.set_defaults(func=cmd_box)

    p = with_n("ell", help="dimension of L(a1 P0 + a2 P_inf)")
    p.add_argument("pos_a1", nargs="?", type=int)
    p.add_argument("pos_a2", nargs="?", type=int)
    p.add_argument("--a1", type=int)
    p.add_argument("--a2", type=int)
    p.set_defaults(func=cmd_ell)

    p = with_n("code", help="build C_L or C_Omega for G = a1 P0 + a2 P_inf")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--dual", action="store_true", help="C_Omega instead of C_L")
    p.add_argument("--export", metavar="FILE")
    p.add_argument("--shorten", type=int, default=0, metavar="S")
    for flag in ("--ma1", "--ma2", "--mb1", "--mb2"):
        p.add_argument(flag, type=int, help="improved-bound quadruple")
    p.add_argument("--orientation", choices=("p0", "pinf"), default="p0")
    p.set_defaults(func=cmd_code)

    p = with_n("search", help="dual codes certified by the improved bound")
    p.add_argument("--deg-min", type=int)
    p.add_argument("--deg-max", type=int)
    p.add_argument("--shorten", type=int, default=0, metavar="S_MAX")
    # the global --json is a switch, so the output file takes its own dest
    p.add_argument("--json", dest="out", metavar="PATH", help="write records as JSON")
    p.add_argument("--all", action="store_true", help="keep every quadruple, not one per (n, k)")
    p.add_argument("--orientation", choices=("p0", "pinf"), default="p0")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="reproduce the reference numbers")
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--slow", action="store_true", help="include the full-rank n=3 check")
    p.set_defaults(func=cmd_verify)
    return parser


def _params(args) -> dict:
    skip = {"func", "command", "json", "_status"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._status = 0
    try:
        text, result = args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except (GKCodesError, ValueError) as exc:
        print(f"gkcodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {"command": args.command, "params": _params(args), "result": result}
        print(json.dumps(envelope, sort_keys=True))
    else:
        print(text)
    return args._status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
