"""
Command-line front end.

    arikikoike basis -m 2 -r 2
    arikikoike mul -m 2 -r 2 T1 T1
    arikikoike nf -m 2 -r 2 T1 T0 T1 'q^-1'
    arikikoike constructions -m 2 -r 1 --spec "q=2,u=[1,3]" --a "[0,1,1]"
    arikikoike poincare -m 2 -r 2 --spec "q=1,u=[1,3]"
    arikikoike verify thm-5.2 -m 2 -r 2 --spec "q=-1,u=[1,3]"

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or
domain errors (bad input, limits exceeded, missing preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .algebra import AlgebraElement, context, from_word
from .checks import CHECK_IDS, SPECIALIZED, run_check
from .constructions import NotInvertible, idempotent_e, pi_a, pi_tilde, z_pair
from .criteria import CriteriaReport, d_W, f_poly, poincare_sym
from .grid import GRID_VERSION, grid
from .rings import parse_specialization
from .symcomb import CumComposition, enumerate_lambda, w_of

SYMBOLIC_LIMIT = 2000
SPECIALIZED_LIMIT = 5000


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _limit(args, specialized: bool) -> int:
    if args.limit is not None:
        return args.limit
    return SPECIALIZED_LIMIT if specialized else SYMBOLIC_LIMIT


def _context(args, specialized: bool | None = None):
    if args.m < 1 or args.r < 1:
        raise UsageError("need m >= 1 and r >= 1")
    spec = parse_specialization(args.spec) if args.spec else None
    if spec is not None and spec.m != args.m:
        raise UsageError(f"specialization has {spec.m} u-values, expected m = {args.m}")
    if specialized is None:
        specialized = spec is not None
    size = args.m ** args.r * factorial(args.r)
    limit = _limit(args, specialized)
    if size > limit:
        raise UsageError(f"basis size {size} exceeds the limit {limit} (override with --limit)")
    return context(args.m, args.r, spec)


def _operand(ctx, text: str) -> AlgebraElement:
    text = text.strip()
    if text.startswith("{"):
        return AlgebraElement.from_json(ctx, json.loads(text))
    return from_word(ctx, text.replace(",", " ").split())


def _emit(args, x: AlgebraElement) -> None:
    print(_dump(x.to_json()) if args.json else str(x))


# ---------------------------------------------------------------- commands

def cmd_basis(args) -> int:
    ctx = _context(args)
    keys = ctx.basis()
    if args.json:
        print(_dump({"m": ctx.m, "r": ctx.r, "size": len(keys),
                     "basis": [{"c": list(c), "w": list(w)} for c, w in keys]}))
    else:
        for c, w in keys:
            print(" ".join(map(str, c)), "|", " ".join(map(str, w)))
    return 0


def cmd_mul(args) -> int:
    ctx = _context(args)
    _emit(args, _operand(ctx, args.lhs) * _operand(ctx, args.rhs))
    return 0


def cmd_nf(args) -> int:
    ctx = _context(args)
    _emit(args, from_word(ctx, args.word))
    return 0


def _construction_record(ctx, a) -> dict:
    a = CumComposition(a)
    fmt = lambda x: x.to_json()["terms"]
    zp = z_pair(ctx, a)
    rec = {
        "a": list(a), "w_a": list(w_of(a)),
        "pi_a": fmt(pi_a(ctx, a)), "pi_tilde_a'": fmt(pi_tilde(ctx, a.prime())),
        "v_a": fmt(zp.v), "z_a": fmt(zp.z), "z_a'": fmt(zp.z_prime),
        "unit": ctx.domain.format_scalar(zp.unit),
    }
    if ctx.domain.is_field:
        try:
            e = idempotent_e(ctx, a, zp)
            rec["e_a"] = fmt(e)
            rec["z_invertible"] = True
            rec["idempotent_ok"] = e * e == e
        except NotInvertible:
            rec["e_a"] = None
            rec["z_invertible"] = False
            rec["idempotent_ok"] = None
    return rec


def cmd_constructions(args) -> int:
    ctx = _context(args)
    if args.a:
        try:
            a = CumComposition(json.loads(args.a))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad composition {args.a!r}: {exc}") from exc
        if a.m != ctx.m or a.r != ctx.r:
            raise UsageError(f"{list(a)} is not in Lambda[{ctx.m}, {ctx.r}]")
        lam = [a]
    else:
        lam = enumerate_lambda(ctx.m, ctx.r)
    records = [_construction_record(ctx, a) for a in lam]
    if args.json:
        print(_dump({"m": ctx.m, "r": ctx.r, "specialization": args.spec,
                     "constructions": records}))
    else:
        for rec in records:
            for k, v in rec.items():
                print(f"{k}: {_dump(v)}")
            print()
    return 0


def cmd_poincare(args) -> int:
    ctx = _context(args)
    m, r = ctx.m, ctx.r
    polys = {"f": f_poly(m, r), "d_S": poincare_sym(r, m), "d_W": d_W(m, r)}
    polys.update({f"f_{i}": f_poly(m, r, i) for i in range(1, m + 1)})
    out = {}
    for name, p in polys.items():
        out[name] = {"symbolic": str(p)}
        if ctx.domain.is_field:
            out[name]["value"] = str(ctx.domain.evaluate(p))
    if ctx.domain.is_field:
        e = ctx.domain.e
        out["e"] = e if isinstance(e, int) else "inf"
    if args.json:
        print(_dump({"m": m, "r": r, "specialization": args.spec, "values": out}))
    else:
        for name, v in out.items():
            print(f"{name}: {v if not isinstance(v, dict) else v.get('value', v['symbolic'])}")
    return 0


def _print_report(rep: CriteriaReport, as_json: bool) -> None:
    if as_json:
        print(_dump(rep.to_json()))
        return
    where = rep.specialization or "symbolic"
    print(f"{rep.check} m={rep.m} r={rep.r} [{where}]")
    for c in rep.checks:
        line = f"  {'PASS' if c.passed else 'FAIL'}  {c.name}"
        if not c.passed and c.detail:
            line += f"  {_dump(c.detail)}"
        print(line)
    verdict = rep.values.get("verdict")
    if verdict:
        print(f"  verdict: {verdict}")
    print(f"  {'all checks pass' if rep.passed else f'{len(rep.failures())} check(s) failed'}")


def cmd_verify(args) -> int:
    if args.check not in CHECK_IDS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECK_IDS)}")
    specialized = bool(args.spec) or args.grid or args.check in SPECIALIZED
    if args.grid:
        if args.spec:
            raise UsageError("--grid and --spec are exclusive")
        _context(args, specialized=True)
        points = [context(args.m, args.r, s) for s in grid(args.m)]
    else:
        points = [_context(args, specialized=specialized)]
    reports = [run_check(args.check, ctx) for ctx in points]
    if args.json and len(reports) > 1:
        print(_dump({"grid_version": GRID_VERSION,
                     "reports": [rep.to_json() for rep in reports]}))
    else:
        for rep in reports:
            _print_report(rep, args.json)
    return 0 if all(rep.passed for rep in reports) else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arikikoike",
                                description="Exact computation in the Ariki-Koike algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("-m", type=int, required=True, help="number of u-parameters")
        sp.add_argument("-r", type=int, required=True, help="rank of the symmetric group")
        sp.add_argument("--spec", help='specialization, e.g. "q=2,u=[1,3]" or '
                                       '"q=2,u=[1,3],field=Fp:7"')
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.add_argument("--limit", type=int, help="override the basis-size limit")

    sp = sub.add_parser("basis", help="list the normal-form basis")
    common(sp)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("mul", help="multiply two elements (JSON or word)")
    common(sp)
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("nf", help="normal form of a word of T<i>, L<i> and scalars")
    common(sp)
    sp.add_argument("word", nargs="*")
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("constructions", help="dump w_a, pi_a, v_a, z_a, e_a")
    common(sp)
    sp.add_argument("--a", help="a cumulative composition, e.g. [0,1,2]")
    sp.set_defaults(func=cmd_constructions)

    sp = sub.add_parser("poincare", help="f_(m,r,i), f_(m,r), d_(S_r), d_W")
    common(sp)
    sp.set_defaults(func=cmd_poincare)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("check", help=", ".join(CHECK_IDS))
    common(sp)
    sp.add_argument("--grid", action="store_true",
                    help="run at every point of the fixed specialization grid")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError, NotInvertible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
