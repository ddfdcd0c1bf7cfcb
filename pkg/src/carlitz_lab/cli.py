"""Command-line front end.

    carlitz-lab bracket --q 3 --a "t^2" --k 1
    carlitz-lab power-sum --q 3 --i 1 --k -1
    carlitz-lab hyper-sum --q 3 --i 1 --pairs 1:0
    carlitz-lab special-poly --q 3 --m 6
    carlitz-lab hyper --q 3 --f "t^4 + t" --j 1 --k 2
    carlitz-lab verify all --q 3 --seed 7 --threads 8
"""

from __future__ import annotations

import argparse
import json
import sys

from . import carlitz as cz
from . import logalg as la
from . import powersums as ps
from . import verify as vf
from .config import settings
from .errors import CarlitzLabError, ResourceError, UnsupportedExponentError, UsageError
from .field import FieldCtx, GF
from .hyperderiv import hyperderivative
from .parse import parse_int_list, parse_pairs, parse_poly
from .poly import PolyA, RatFun, carlitz_lcm
from .serialize import field_to_json, to_json
from .vandermonde import hyperderiv_via_vandermonde

TRUNC_CAP = 256


DEFAULTS = {'p': None, 'e': None, 'modulus': None, 'q': None, 'cap': None, 'format': 'text',
            'seed': 0, 'trunc': None, 'threads': 1}


def _common_parser(top: bool):
    # the subcommand copies suppress their defaults so that options given before
    # the subcommand name are not overwritten
    common = argparse.ArgumentParser(add_help=False)
    if top:
        common.set_defaults(**DEFAULTS)
    d = {} if top else {'default': argparse.SUPPRESS}
    g = common.add_argument_group('field and run options')
    g.add_argument('--p', type=int, help='characteristic (default 3)', **d)
    g.add_argument('--e', type=int, help='extension degree (default 1)', **d)
    g.add_argument('--modulus', help='irreducible modulus for e > 1, coefficients constant-first, e.g. 1,1,1', **d)
    g.add_argument('--q', type=int, help='field size; shorthand for --p/--e', **d)
    g.add_argument('--cap', type=int, help='enumeration cap (default 10^6 or $CARLITZ_LAB_CAP)', **d)
    g.add_argument('--format', choices=('text', 'json'), **d)
    g.add_argument('--seed', type=int, **d)
    g.add_argument('--trunc', type=int, help='z-adic truncation order N (default min(q^3, 256))', **d)
    g.add_argument('--threads', type=int, help='worker processes for brute-force sums', **d)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser(top=False)
    parser = argparse.ArgumentParser(prog='carlitz-lab', description='Carlitz module computations over F_q[t].',
                                     parents=[_common_parser(top=True)])
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('bracket', parents=[common], help='coefficients <a>_k of C_a')
    p.add_argument('--a', required=True, help='polynomial literal in t')
    p.add_argument('--k', type=int, default=None, help='single index (default: all k)')

    p = sub.add_parser('power-sum', parents=[common], help='S_i(k), brute force and closed form')
    p.add_argument('--i', type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument('--k', type=int)
    grp.add_argument('--ells', help='exponents l_1,...,l_s for k = q^l_1 + ... + q^l_s - 1')

    p = sub.add_parser('hyper-sum', parents=[common], help='sums of products of hyperderivatives')
    p.add_argument('--i', type=int, required=True)
    p.add_argument('--pairs', required=True, help='j:mu pairs, e.g. 1:0,2:1')
    p.add_argument('--unsigned', action='store_true', help='omit the 1/a factor')

    p = sub.add_parser('special-poly', parents=[common], help='the log-algebraicity polynomial P_m')
    p.add_argument('--m', type=int, required=True)

    p = sub.add_parser('hyper', parents=[common], help='hyperderivative, direct and via twists')
    p.add_argument('--f', required=True, help='polynomial literal in t')
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--k', type=int, default=0, help='also apply the q^k-th power twist')

    p = sub.add_parser('verify', parents=[common], help='run a verification suite')
    p.add_argument('suite', help='one of: ' + ', '.join(vf.SUITES + ('all',)))
    return parser


def resolve_field(args) -> FieldCtx:
    modulus = parse_int_list(args.modulus) if args.modulus else None
    if args.q is not None:
        ctx = GF(args.q, modulus)
        if (args.p is not None and args.p != ctx.p) or (args.e is not None and args.e != ctx.e):
            raise UsageError(f"--q {args.q} disagrees with --p/--e")
        return ctx
    p = 3 if args.p is None else args.p
    e = 1 if args.e is None else args.e
    return GF(p ** e, modulus) if modulus is None else FieldCtx(p, e, modulus)


def _trunc(args, ctx):
    if args.trunc is not None:
        if args.trunc < 1:
            raise UsageError("--trunc must be >= 1")
        return args.trunc
    return min(ctx.q ** 3, TRUNC_CAP)


# --- commands --------------------------------------------------------------------------

def cmd_bracket(args, ctx):
    a = parse_poly(ctx, args.a)
    ks = [args.k] if args.k is not None else list(range(max(a.degree, 0) + 1))
    direct = cz.carlitz_of(a)
    mu = cz.mu_expand(a) if a else []
    monomial = a.degree >= 0 and len([c for c in a.c if c]) == 1 and a.c[-1] == 1
    rows = []
    for k in ks:
        routes = {"direct": direct.coefficient(k),
                  "carlitz": cz.bracket_carlitz_formula(a, k),
                  "hyper": cz.bracket_hyper_formula(a, k),
                  "mu": mu[k] if 0 <= k < len(mu) else PolyA.zero(ctx)}
        if monomial and k <= a.degree:
            routes["theta_power"] = cz.bracket_theta_power(ctx, a.degree, k)
        agree = len(set(routes.values())) == 1
        rows.append({"k": k, "value": routes["direct"], "routes": routes, "agreement": agree})
    ok = all(r["agreement"] for r in rows)
    data = {"field": field_to_json(ctx), "a": a, "brackets": rows, "agreement": ok}
    text = [f"<{a}>_{r['k']} = {r['value']}   agreement={str(r['agreement']).lower()}" for r in rows]
    return data, text, ok


def _power_sum_closed(ctx, i, k, ells):
    """The closed form that applies to S_i(k), with a label, or (None, None)."""
    if ells is not None:
        return ps.s_closed(ctx, i, ells), f"product formula, l = {list(ells)}"
    if k == -1:
        return RatFun(PolyA.one(ctx), carlitz_lcm(ctx, i)), "1/L_i"
    if k >= 0 and ps.sivanish_predicate(ctx.q, i, k):
        return RatFun.zero(ctx), "vanishing region"
    if k >= 0:
        digits = la.digit_multiset(k + 1, ctx.q)
        if 1 <= len(digits) <= ctx.q - 1:
            return ps.s_closed(ctx, i, digits), f"product formula, l = {digits}"
    return None, None


def cmd_power_sum(args, ctx):
    ells = parse_int_list(args.ells) if args.ells else None
    k = ps.power_sum_exponent(ctx.q, ells) if ells is not None else args.k
    brute = ps.s_brute(ctx, args.i, k)
    closed, label = _power_sum_closed(ctx, args.i, k, ells)
    agree = None if closed is None else closed == brute
    data = {"field": field_to_json(ctx), "i": args.i, "k": k, "brute": brute, "closed": closed,
            "closed_form": label, "agreement": agree}
    text = [f"S_{args.i}({k}) = {brute}"]
    if closed is not None:
        text.append(f"closed ({label}) = {closed}   agreement={str(agree).lower()}")
    return data, text, agree is not False


def cmd_hyper_sum(args, ctx):
    pairs = parse_pairs(args.pairs)
    signed = not args.unsigned
    brute = ps.h_brute(ctx, args.i, pairs, signed=signed)
    closed = None
    if signed:
        try:
            closed = ps.h_closed(ctx, args.i, pairs)
        except UsageError:
            closed = None
    agree = None if closed is None else closed == brute
    data = {"field": field_to_json(ctx), "i": args.i, "pairs": [list(p) for p in pairs],
            "signed": signed, "brute": brute, "closed": closed, "agreement": agree}
    text = [f"H_{args.i}{list(pairs)} = {brute}"]
    if closed is not None:
        text.append(f"closed = {closed}   agreement={str(agree).lower()}")
    return data, text, agree is not False


def cmd_special_poly(args, ctx):
    N = _trunc(args, ctx)
    try:
        rep = la.verify_log_algebraicity(ctx, args.m, N)
    except UnsupportedExponentError as exc:
        series = la.special_poly_series(ctx, args.m, N)
        data = {"m": args.m, "q": ctx.q, "N": N, "closed_form": None, "reason": str(exc),
                "series": series}
        return data, [f"P_{args.m} mod z^{N} = {series.to_multipoly()}", f"closed form: {exc}"], True
    data = rep.to_dict()
    text = [str(rep.poly),
            f"match={str(rep.match).lower()} integral={str(rep.integral).lower()} "
            f"N={N} max_i={rep.max_i}"]
    return data, text, rep.passed


def cmd_hyper(args, ctx):
    f = parse_poly(ctx, args.f)
    if args.j < 0 or args.k < 0:
        raise UsageError("--j and --k must be >= 0")
    direct = hyperderivative(f, args.j).twist(args.k)
    i = max(f.degree, args.j, 0)
    via, certificate = hyperderiv_via_vandermonde(f, i, args.j, args.k)
    agree = certificate and via == direct
    data = {"field": field_to_json(ctx), "f": f, "j": args.j, "k": args.k, "value": direct,
            "vandermonde": via, "certificate": certificate, "agreement": agree}
    label = f"d^{args.j}({f})" + (f"^(q^{args.k})" if args.k else "")
    text = [f"{label} = {direct}",
            f"via twists = {via}   certificate={str(certificate).lower()} agreement={str(agree).lower()}"]
    return data, text, agree


def cmd_verify(args, ctx):
    if args.suite not in vf.SUITES + ('all',):
        raise UsageError(f"unknown suite {args.suite!r}; valid suites: {', '.join(vf.SUITES + ('all',))}")
    data = vf.report(args.suite, ctx, args.seed)
    text = []
    for c in data["checks"]:
        line = f"{'PASS' if c['passed'] else 'FAIL'}  {c['module']}.{c['operation']}  {c['name']}"
        if not c['passed']:
            line += f"  counterexample={json.dumps(c['counterexample'], ensure_ascii=False)}"
        text.append(line)
    text.append(f"{sum(c['passed'] for c in data['checks'])}/{len(data['checks'])} checks passed")
    return data, text, data["passed"]


COMMANDS = {'bracket': cmd_bracket, 'power-sum': cmd_power_sum, 'hyper-sum': cmd_hyper_sum,
            'special-poly': cmd_special_poly, 'hyper': cmd_hyper, 'verify': cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = resolve_field(args)
        with settings(cap=args.cap, workers=args.threads):
            data, text, ok = COMMANDS[args.command](args, ctx)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CarlitzLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == 'json':
        print(json.dumps(to_json(data), ensure_ascii=False, indent=2))
    else:
        print('\n'.join(text))
    return 0 if ok else 1


if __name__ == '__main__':
    sys.exit(main())
