"""Command-line interface: ``subtopes {matrices,decompose,closedform,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 singular
(odd ``t``) error.

Sign-vector arguments such as ``--0+--`` look like options to argparse;
any token made only of ``+``, ``-`` and ``0`` (other than a bare ``--``) is
treated as the target. ``--target=VEC`` and a ``--`` guard also work.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import bench as bench_mod
from . import closedform, decomp, oracle
from .cycles import (
    SymmetricCycle,
    distinguished_cycle,
    load_cycle,
    matrix_M,
    matrix_N,
    matrix_P,
    matrix_W,
    random_cycle,
)
from .errors import DomainError, SingularError, SubtopeError
from .signs import Subtope, Tope, as_sign_vector, tope_from_negative_part

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SINGULAR = 0, 1, 2, 3

_SIGN_TOKEN = re.compile(r"^[+\-0]{2,}$")


class InputError(Exception):
    pass


def _vec(v) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


def _guard_sign_args(argv: list[str]) -> list[str]:
    out = []
    for i, tok in enumerate(argv):
        if tok == "--":
            return out + argv[i:]
        out.append(f"--target={tok}" if _SIGN_TOKEN.match(tok) else tok)
    return out


def _resolve_cycle(args, t_hint: int | None = None) -> SymmetricCycle:
    t = args.t if args.t is not None else t_hint
    if args.cycle:
        try:
            D = load_cycle(args.cycle)
        except OSError as exc:
            raise InputError(f"cannot read cycle file: {exc}") from None
        if t is not None and D.t != t:
            raise InputError(f"cycle file has t={D.t} but t={t} was requested")
        return D
    if t is None:
        raise InputError("give --t or a --cycle file")
    if getattr(args, "random_cycle", False):
        return random_cycle(t, args.seed)
    return distinguished_cycle(t)


def _target(args):
    pos = getattr(args, "target_pos", None)
    if pos is not None and args.target is not None:
        raise InputError("give the target once")
    return pos if pos is not None else args.target


# -- matrices ----------------------------------------------------------------


def matrices_result(D: SymmetricCycle) -> dict:
    t = D.t
    res = {
        "t": t,
        "cycle": D.to_json(),
        "M": matrix_M(D).tolist(),
        "W": matrix_W(D).tolist(),
        "N": matrix_N(t).tolist(),
        "P": None,
        "notice": None,
    }
    try:
        res["P"] = matrix_P(t).tolist()
    except SingularError as exc:
        res["notice"] = f"P({t}) refused: {exc}"
    return res


def matrices_text(res: dict) -> str:
    t = res["t"]
    out = []
    for key, title in (("M", "M(D)"), ("W", "W(D)"), ("N", f"N({t})"), ("P", f"P({t})")):
        if res[key] is None:
            continue
        rows = res[key]
        width = max(len(str(x)) for r in rows for x in r)
        out.append(f"{title} =")
        out += ["  " + " ".join(str(x).rjust(width) for x in r) for r in rows]
    if res["notice"]:
        out.append(res["notice"])
    return "\n".join(out)


def cmd_matrices(args) -> int:
    D = _resolve_cycle(args)
    res = matrices_result(D)
    _emit(args, res, matrices_text)
    return EXIT_SINGULAR if res["P"] is None else EXIT_OK


# -- decompose ---------------------------------------------------------------


def decompose_result(target, D: SymmetricCycle, check: bool = False) -> dict:
    v = as_sign_vector(target)
    if len(v) != D.t:
        raise InputError(f"target has length {len(v)}, cycle has t={D.t}")
    if isinstance(v, Tope):
        res = {"kind": "tope", "x": list(decomp.tope_coords(v, D))}
        res["vertices"] = list(decomp.vertex_decomposition(v, D).indices)
        dec = decomp.tope_decomposition(v, D)
    elif isinstance(v, Subtope):
        T1, T2 = decomp.subtope_to_tope_pair(v)
        res = {
            "kind": "subtope",
            "pair": [str(T1), str(T2)],
            "x_pair": [list(decomp.tope_coords(T1, D)), list(decomp.tope_coords(T2, D))],
        }
        dec = decomp.subtope_decomposition(v, D)
    else:
        raise InputError(f"{v} is neither a tope nor a subtope")
    xbar = [0] * D.t
    for k, c in dec.terms:
        xbar[k % D.t] = c if k < D.t else -c
    res["xbar"] = xbar
    res.update(dec.to_json())
    res["rendered"] = dec.render()
    if check:
        rec = decomp.reconstruct(dec)
        solved = oracle.exact_solve(v.entries, matrix_W(D))
        res["check"] = {
            "reconstruction": list(rec),
            "ok": rec == v.entries and tuple(solved) == tuple(res["xbar"]),
        }
    return res


def decompose_text(res: dict) -> str:
    t = res["cycle"]["t"]
    lines = [f"target {res['kind']}: {res['target']}  (t={t})"]
    if res["kind"] == "tope":
        lines.append(f"x = {_vec(res['x'])}")
        lines.append("vertices: " + " + ".join(f"D^{k}" for k in res["vertices"]))
    else:
        (a, b), (xa, xb) = res["pair"], res["x_pair"]
        lines.append(f"T' = {a}  x(T') = {_vec(xa)}")
        lines.append(f"T'' = {b}  x(T'') = {_vec(xb)}")
    lines.append(f"xbar = {_vec(res['xbar'])}")
    lines.append(f"{res['target']} = {res['rendered']}")
    if "check" in res:
        lines.append(f"check: {'OK' if res['check']['ok'] else 'FAILED'} reconstruction = {_vec(res['check']['reconstruction'])}")
    return "\n".join(lines)


def cmd_decompose(args) -> int:
    target = _target(args)
    if (target is None) == (args.neg is None):
        raise InputError("give exactly one target: a sign vector or --neg intervals")
    if args.neg is not None:
        if args.t is None:
            raise InputError("--neg needs --t")
        target = str(tope_from_negative_part(closedform.parse_intervals(args.neg, args.t).elements(), args.t))
    v = as_sign_vector(target)
    if args.kind == "tope" and not isinstance(v, Tope):
        raise InputError(f"{v} is not a tope")
    if args.kind == "subtope" and not isinstance(v, Subtope):
        raise InputError(f"{v} is not a subtope")
    D = _resolve_cycle(args, t_hint=len(v))
    res = decompose_result(v, D, check=args.check)
    _emit(args, res, decompose_text)
    if args.check and not res["check"]["ok"]:
        return EXIT_FAIL
    return EXIT_OK


# -- closedform --------------------------------------------------------------


def closedform_result(neg: str, t: int, check: bool = False) -> dict:
    A = closedform.parse_intervals(neg, t)
    xbar = closedform.closed_form_xbar(A)
    terms = closedform.row_terms(A)
    res = {
        "t": t,
        "case": closedform.case_label(A),
        "intervals": [list(iv) for iv in A.intervals],
        "rho": A.rho,
        "rows": [{"sign": s, "row": i} for s, i in terms],
        "target": str(tope_from_negative_part(A.elements(), t)),
        "xbar": list(xbar),
    }
    if check:
        ref = decomp.xbar_of_tope(res["target"], distinguished_cycle(t))
        res["check"] = {"solve_xbar": list(ref), "ok": tuple(ref) == xbar}
    return res


def _row_expr(rows) -> str:
    out = ""
    for r in rows:
        sign = "-" if r["sign"] < 0 else "+"
        out += f" {sign} P^{r['row']}" if out else f"{'-' if r['sign'] < 0 else ''}P^{r['row']}"
    return out


def closedform_text(res: dict) -> str:
    ivs = ", ".join(f"[{i},{j}]" for i, j in res["intervals"])
    lines = [
        f"A = {ivs}  (t={res['t']}, rho={res['rho']})",
        f"case ({res['case']})",
        f"xbar({res['target']}) = {_row_expr(res['rows'])}",
        f"xbar = {_vec(res['xbar'])}",
    ]
    if "check" in res:
        lines.append(f"check against exact solve: {'OK' if res['check']['ok'] else 'FAILED'}")
    return "\n".join(lines)


def cmd_closedform(args) -> int:
    if args.t is None or args.neg is None:
        raise InputError("closedform needs --t and --neg")
    if args.t % 2:
        raise SingularError(f"closed forms need even t, got t={args.t}")
    res = closedform_result(args.neg, args.t, check=args.check)
    _emit(args, res, closedform_text)
    if args.check and not res["check"]["ok"]:
        return EXIT_FAIL
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    D = _resolve_cycle(args)
    scopes = oracle.SCOPES if args.scope == "all" else [s.strip() for s in args.scope.split(",") if s.strip()]
    rep = oracle.verify_suite(D.t, D, scopes=scopes, seed=args.seed if args.random_cycle else None, enum_cap=args.enum_cap)
    if args.format == "json":
        print(oracle.dump_report(rep))
    else:
        print(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- bench -------------------------------------------------------------------


def cmd_bench(args) -> int:
    try:
        ts = [int(x) for x in args.t_list.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad t list {args.t_list!r}") from None
    rows = bench_mod.run_bench(ts, reps=args.reps, seed=args.seed, solve_cap=args.solve_cap)
    if args.format == "csv":
        sys.stdout.write(bench_mod.to_csv(rows))
        if any(r.solve_ns is None for r in rows):
            print(f"notice: exact solve omitted for t > {args.solve_cap}", file=sys.stderr)
    elif args.format == "json":
        print(json.dumps([{**r.__dict__, "speedup": r.speedup} for r in rows], indent=2))
    else:
        print(bench_mod.to_text(rows, args.solve_cap))
    return EXIT_OK


# -- plumbing ----------------------------------------------------------------


def _emit(args, res: dict, render) -> None:
    if args.format == "json":
        print(json.dumps(res, indent=2))
    else:
        print(render(res))


def _add_cycle_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t", type=int, help="ground-set size")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--cycle", metavar="FILE", help="cycle file (text or JSON)")
    src.add_argument("--distinguished", action="store_true", help="use the distinguished cycle R (default)")
    src.add_argument("--random-cycle", action="store_true", help="use a seeded random symmetric cycle")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subtopes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrices", help="print M(D), W(D), N(t) and P(t)")
    _add_cycle_opts(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("decompose", help="decompose a tope or subtope over the edge subtopes")
    _add_cycle_opts(p)
    p.add_argument("target_pos", nargs="?", metavar="TARGET", help="sign vector, e.g. ++++++")
    p.add_argument("--target", help=argparse.SUPPRESS)
    p.add_argument("--neg", metavar="INTERVALS", help="target tope by negative part, e.g. 2-3,5")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--tope", dest="kind", action="store_const", const="tope")
    kind.add_argument("--subtope", dest="kind", action="store_const", const="subtope")
    p.add_argument("--check", action="store_true", help="verify by reconstruction and exact solve")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("closedform", help="closed-form xbar over the distinguished cycle")
    p.add_argument("--t", type=int)
    p.add_argument("--neg", metavar="INTERVALS", help="negative part, e.g. 2-3,5 or 1-t")
    p.add_argument("--check", action="store_true", help="cross-check against the exact solve path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_closedform)

    p = sub.add_parser("verify", help="run the verification battery")
    _add_cycle_opts(p)
    p.add_argument("--scope", default="all", help=f"'all' or a comma list of {','.join(oracle.SCOPES)}")
    p.add_argument("--enum-cap", type=int, default=None, help="max t for 3^t enumeration (env SUBTOPES_ENUM_CAP)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time closed form against exact solve")
    p.add_argument("--t", dest="t_list", default="64,256,1024", help="comma list of even t")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solve-cap", type=int, default=bench_mod.DEFAULT_SOLVE_CAP)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_guard_sign_args(argv))
    try:
        return args.func(args)
    except SingularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (InputError, DomainError, SubtopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
