"""Verification suites: every structural identity of the library, checked
exactly, grouped by module.

A check returns ``None`` on success or a dict describing the first
counterexample.  Randomized checks draw from a ``random.Random`` seeded by
(seed, suite, check), so a run is reproducible from its seed alone.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import random
import time

from . import carlitz as cz
from . import hyperderiv as hd
from . import logalg as la
from . import powersums as ps
from . import symfun as sf
from . import vandermonde as vm
from .errors import UsageError
from .field import GF
from .multipoly import THETA, ZZ, A, Fq, K, MultiPoly
from .poly import PolyA, RatFun, monic_enumerate, poly_gcd
from .series import TruncSeries

SUITES = ('algebra', 'hyper', 'symfun', 'vandermonde', 'carlitz', 'powersums', 'logalg')

_REGISTRY: dict = {s: [] for s in SUITES}


def check(suite, operation):
    def register(fn):
        _REGISTRY[suite].append((operation, fn))
        return fn
    return register


@dataclasses.dataclass
class CheckResult:
    module: str
    operation: str
    name: str
    passed: bool
    millis: float
    counterexample: dict | None = None

    def to_dict(self):
        return dataclasses.asdict(self)


def run_suite(name: str, ctx, seed: int = 0) -> list:
    if name == 'all':
        return [r for s in SUITES for r in run_suite(s, ctx, seed)]
    if name not in _REGISTRY:
        raise UsageError(f"unknown suite {name!r}; valid suites: {', '.join(SUITES + ('all',))}")
    out = []
    for operation, fn in _REGISTRY[name]:
        rng = random.Random(f"{seed}:{name}:{fn.__name__}")
        start = time.perf_counter()
        try:
            bad = fn(ctx, rng)
        except Exception as exc:  # a crash is reported as a failed check
            bad = {"error": f"{type(exc).__name__}: {exc}"}
        millis = round((time.perf_counter() - start) * 1000.0, 3)
        out.append(CheckResult(name, operation, fn.__name__, bad is None, millis, bad))
    return out


def report(name: str, ctx, seed: int = 0) -> dict:
    results = run_suite(name, ctx, seed)
    return {"suite": name, "q": ctx.q, "seed": seed,
            "passed": all(r.passed for r in results),
            "checks": [r.to_dict() for r in results]}


# --- helpers ---------------------------------------------------------------------

def _rand_poly(ctx, rng, max_deg, monic=False):
    d = rng.randint(0, max_deg)
    c = [rng.randrange(ctx.q) for _ in range(d + 1)]
    if monic:
        c[-1] = 1
    return PolyA(ctx, c)


def _all_polys(ctx, max_deg):
    yield PolyA.zero(ctx)
    for d in range(max_deg + 1):
        for cs in itertools.product(range(ctx.q), repeat=d):
            for lead in range(1, ctx.q):
                yield PolyA(ctx, list(cs) + [lead])


def _monic_polys(ctx, max_deg):
    for d in range(max_deg + 1):
        yield from monic_enumerate(ctx, d)


def _zz_vars(prefix, n):
    return [MultiPoly.var(ZZ, f'{prefix}{m}') for m in range(1, n + 1)]


# --- algebra ---------------------------------------------------------------------------

@check('algebra', 'fq_ops')
def fq_frobenius_exhaustive(ctx, rng):
    for q in (2, 3, 4, 5, 7, 8, 9):
        F = GF(q)
        for x in F.elements():
            if F.pow(x, q) != x:
                return {"q": q, "x": x}
            for y in F.elements():
                lhs = F.pow(F.add(x, y), F.p)
                if lhs != F.add(F.pow(x, F.p), F.pow(y, F.p)):
                    return {"q": q, "x": x, "y": y}
    return None


@check('algebra', 'poly_ops')
def poly_ring_axioms(ctx, rng):
    for _ in range(200):
        f, g, h = (_rand_poly(ctx, rng, 6) for _ in range(3))
        if f * g != g * f or (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h:
            return {"f": str(f), "g": str(g), "h": str(h)}
        if f and g and (f * g).degree != f.degree + g.degree:
            return {"f": str(f), "g": str(g), "law": "degree"}
        if g:
            qt, r = divmod(f, g)
            if qt * g + r != f or r.degree >= g.degree:
                return {"f": str(f), "g": str(g), "law": "divmod"}
        if f or g:
            d = poly_gcd(f, g)
            if (f % d) or (g % d) or not d.is_monic():
                return {"f": str(f), "g": str(g), "law": "gcd"}
    return None


@check('algebra', 'frobenius_twist')
def twist_is_power(ctx, rng):
    for _ in range(100):
        f = _rand_poly(ctx, rng, 4)
        k = rng.randint(0, 2)
        if f.twist(k) != f ** (ctx.q ** k):
            return {"f": str(f), "k": k}
    return None


@check('algebra', 'monic_enumerate')
def monic_enumeration_complete(ctx, rng):
    for i in range(4):
        if ctx.q ** i > 10 ** 4:
            break
        got = list(monic_enumerate(ctx, i))
        want = {PolyA(ctx, list(c) + [1]) for c in itertools.product(range(ctx.q), repeat=i)}
        if len(got) != ctx.q ** i or set(got) != want:
            return {"i": i}
    return None


@check('algebra', 'ratfun_ops')
def ratfun_canonical(ctx, rng):
    for _ in range(50):
        a = _rand_poly(ctx, rng, 4)
        b = _rand_poly(ctx, rng, 4)
        if not b:
            continue
        ref = RatFun(a, b)
        c = _rand_poly(ctx, rng, 3)
        if not c:
            continue
        alt = RatFun(a * c, b * c)
        if (alt.num, alt.den) != (ref.num, ref.den) or not ref.den.is_monic():
            return {"a": str(a), "b": str(b), "c": str(c)}
    return None


@check('algebra', 'multipoly_ops')
def multipoly_evaluation_homomorphism(ctx, rng):
    ring = Fq(ctx)
    names = (THETA, 't', 'x')

    def rand_mp():
        items = [({v: rng.randint(0, 3) for v in names}, rng.randrange(ctx.q)) for _ in range(4)]
        return MultiPoly.from_terms(ring, items)

    for _ in range(30):
        f, g = rand_mp(), rand_mp()
        point = {v: rng.randrange(ctx.q) for v in names}
        lhs = (f * g).evaluate(point)
        rhs = ctx.mul(f.evaluate(point), g.evaluate(point))
        if lhs != rhs or (f + g).evaluate(point) != ctx.add(f.evaluate(point), g.evaluate(point)):
            return {"f": str(f), "g": str(g), "point": str(point)}
    th, t = MultiPoly.gens(ring, THETA, 't')
    if not (t - th).subs('t', th).is_zero():
        return {"law": "substitute t := theta in t - theta"}
    return None


@check('algebra', 'series_ops')
def series_truncation(ctx, rng):
    ring = A(ctx)
    z, x = MultiPoly.var(ring, 'z'), MultiPoly.var(ring, 'x')
    N = 6
    for _ in range(10):
        f = sum((z ** n * x ** rng.randint(0, 2) * PolyA.const(ctx, rng.randrange(ctx.q)) for n in range(9)),
                MultiPoly.zero(ring))
        g = sum((z ** n * PolyA.theta(ctx) ** rng.randint(0, 2) for n in range(9)), MultiPoly.zero(ring))
        full = TruncSeries.from_multipoly(f * g, N)
        cut = TruncSeries.from_multipoly(f.truncate('z', N), N) * TruncSeries.from_multipoly(g.truncate('z', N), N)
        if full != cut:
            return {"f": str(f), "g": str(g)}
    return None


# --- hyperderivatives ------------------------------------------------------------------

_HYPER_FIELDS = (2, 3, 4, 5)


@check('hyper', 'hyperderivative')
def product_and_composition_rules(ctx, rng):
    for q in _HYPER_FIELDS:
        F = GF(q)
        for _ in range(100):
            f, g = _rand_poly(F, rng, 8), _rand_poly(F, rng, 8)
            j = rng.randint(0, 8)
            k = rng.randint(0, 8 - j)
            lhs = hd.hyperderivative(f * g, j)
            rhs = PolyA.zero(F)
            for n in range(j + 1):
                rhs = rhs + hd.hyperderivative(f, n) * hd.hyperderivative(g, j - n)
            if lhs != rhs:
                return {"q": q, "f": str(f), "g": str(g), "j": j, "rule": "product"}
            comp = hd.hyperderivative(hd.hyperderivative(f, k), j)
            want = hd.hyperderivative(f, j + k).scale(F.from_int(hd.lucas_binomial(j + k, j, F.p)))
            if comp != want:
                return {"q": q, "f": str(f), "j": j, "k": k, "rule": "composition"}
    return None


@check('hyper', 'lucas_binomial')
def lucas_criterion(ctx, rng):
    for p in (2, 3, 5):
        F = GF(p)
        for n in range(p ** 3):
            for j in range(n + 1):
                if hd.lucas_binomial(n, j, p) != math.comb(n, j) % p:
                    return {"p": p, "n": n, "j": j}
                dn, dj, nn, jj = [], [], n, j
                while nn or jj:
                    dn.append(nn % p)
                    dj.append(jj % p)
                    nn //= p
                    jj //= p
                if any(b > a for a, b in zip(dn, dj)):
                    if hd.hyperderivative(PolyA.monomial(F, n), j):
                        return {"p": p, "n": n, "j": j, "law": "digit vanishing"}
    return None


@check('hyper', 'taylor_about_theta')
def taylor_reconstruction(ctx, rng):
    for _ in range(50):
        f = _rand_poly(ctx, rng, 12)
        coeffs = hd.taylor_about_theta(f, max(f.degree, 0))
        if hd.taylor_reconstruct(coeffs) != MultiPoly.from_polya(f, 't'):
            return {"f": str(f)}
    return None


@check('hyper', 'voloch_qpower_check')
def voloch_identity(ctx, rng):
    for q in (2, 3, 4):
        F = GF(q)
        for _ in range(20):
            g = PolyA(F, [rng.randrange(q) for _ in range(32)])
            for k in range(4):
                if not hd.voloch_qpower_check(g, k, 32):
                    return {"q": q, "g": str(g), "k": k}
    return None


# --- symmetric functions -------------------------------------------------------------

@check('symfun', 'esym')
def generating_function(ctx, rng):
    for p in (5, 101):
        F = GF(p)
        ring = Fq(F)
        t = MultiPoly.var(ring, 't')
        for n in range(7):
            vals = [rng.randrange(p) for _ in range(n)]
            prod = MultiPoly.const(ring, 1)
            for v in vals:
                prod = prod * (1 + t.scale(v))
            for j in range(-1, n + 2):
                want = prod.coefficient(t=j) if j >= 0 else 0
                got = sf.esym([F.elem(v) for v in vals], j, F.elem(1))
                if got != want:
                    return {"p": p, "values": vals, "j": j}
    return None


def _rec_checks(xs, one):
    i = len(xs)
    for ell in range(i):
        rest = xs[:ell] + xs[ell + 1:]
        for j in range(-1, i + 2):
            if sf.esym(xs, j, one) != sf.esym(rest, j, one) + xs[ell] * sf.esym(rest, j - 1, one):
                return {"i": i, "l": ell + 1, "j": j, "identity": "e recurrence"}
            if sf.hsym(xs, j, one) != sf.hsym(rest, j, one) + xs[ell] * sf.hsym(xs, j - 1, one):
                return {"i": i, "l": ell + 1, "j": j, "identity": "h recurrence"}
    return None


@check('symfun', 'hsym')
def recurrences(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    for i in range(1, 6):
        bad = _rec_checks(_zz_vars('x', i), one)
        if bad:
            return bad
    F = GF(101)
    for _ in range(100):
        i = rng.randint(1, 5)
        bad = _rec_checks([F.elem(rng.randrange(101)) for _ in range(i)], F.elem(1))
        if bad:
            return bad
    return None


def _at_zero(f, name):
    # canonical MultiPoly drops variables it does not contain
    return f.subs(name, 0) if name in f.vars else f


@check('symfun', 'esym')
def specialization_at_zero(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    for i in range(1, 6):
        xs = _zz_vars('x', i)
        for ell in range(i):
            rest = xs[:ell] + xs[ell + 1:]
            name = f'x{ell + 1}'
            for j in range(0, i + 2):
                if _at_zero(sf.esym(xs, j, one), name) != sf.esym(rest, j, one):
                    return {"i": i, "l": ell + 1, "j": j, "identity": "e at zero"}
                if _at_zero(sf.hsym(xs, j, one), name) != sf.hsym(rest, j, one):
                    return {"i": i, "l": ell + 1, "j": j, "identity": "h at zero"}
    return None


def _is_identity(M, one):
    zero = one * 0
    return all(M[r][c] == (one if r == c else zero) for r in range(len(M)) for c in range(len(M)))


@check('symfun', 'matrix_E')
def e_times_h_identity(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    for d in range(1, 7):
        xs = _zz_vars('x', d - 1)
        if not _is_identity(sf.matmul(sf.matrix_E(d, xs, one), sf.matrix_H(d, xs, one)), one):
            return {"d": d}
    return None


@check('symfun', 'symmrec2_sum')
def telescoping_sum(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    for i in range(1, 6):
        xs = _zz_vars('x', i - 1)
        for k in range(1, i + 1):
            want = one if k == i else one * 0
            if sf.symmrec2_sum(i, k, xs, one) != want:
                return {"i": i, "k": k}
    return None


def _shift_both_sides(d, k, xs, T, one):
    shifted = [T - x for x in xs]
    a = (sf.ehdiff_elementary(d, k, xs, T, one), sf.esym(shifted, d - k, one)) if k <= d else None
    b = (sf.ehdiff_complete(d, k, xs, T, one), sf.hsym(shifted, k, one))
    return a, b


@check('symfun', 'ehdiff_elementary')
def shift_identities(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    T = MultiPoly.var(ZZ, 'T')
    for d in range(1, 5):
        xs = _zz_vars('x', d)
        for k in range(0, 5):
            a, b = _shift_both_sides(d, k, xs, T, one)
            if a and a[0] != a[1]:
                return {"d": d, "k": k, "part": "a", "ring": "ZZ"}
            if b[0] != b[1]:
                return {"d": d, "k": k, "part": "b", "ring": "ZZ"}
    for p in (2, 3):
        F = GF(p)
        for _ in range(50):
            d, k = rng.randint(1, 4), rng.randint(0, 4)
            xs = [F.elem(rng.randrange(p)) for _ in range(d)]
            T = F.elem(rng.randrange(p))
            a, b = _shift_both_sides(d, k, xs, T, F.elem(1))
            if (a and a[0] != a[1]) or b[0] != b[1]:
                return {"p": p, "d": d, "k": k, "x": [str(x) for x in xs], "T": str(T)}
    return None


@check('symfun', 'g_poly')
def variable_elimination(ctx, rng):
    one = MultiPoly.const(ZZ, 1)
    for i in range(2, 6):
        xs, ys = _zz_vars('x', i - 1), _zz_vars('y', i - 1)
        for k in range(1, i):
            for ell in range(1, k + 1):
                g = sf.g_poly(i, k, ell, xs, ys, one)
                if any(g.degree(f'x{m}') > 0 for m in range(ell + 1, k + 1)):
                    return {"i": i, "k": k, "l": ell, "law": "contains eliminated variable"}
                reduced_x = xs[:ell] + xs[k:i - 1]
                if g != sf.g_poly(i - (k - ell), ell, ell, reduced_x, ys, one):
                    return {"i": i, "k": k, "l": ell, "law": "reindexing"}
    F = GF(101)
    for _ in range(20):
        i = rng.randint(2, 5)
        k = rng.randint(1, i - 1)
        ell = rng.randint(1, k)
        xs = [F.elem(rng.randrange(101)) for _ in range(i - 1)]
        ys = [F.elem(rng.randrange(101)) for _ in range(ell)]
        xs2 = list(xs)
        for m in range(ell, k):
            xs2[m] = F.elem(rng.randrange(101))
        if sf.g_poly(i, k, ell, xs, ys) != sf.g_poly(i, k, ell, xs2, ys):
            return {"i": i, "k": k, "l": ell, "law": "random points"}
    return None


# --- Vandermonde ---------------------------------------------------------------------

@check('vandermonde', 'kappa')
def kappa_inverts_vandermonde(ctx, rng):
    for p in (5, 101):
        F = GF(p)
        for _ in range(30):
            i = rng.randint(0, min(5, p - 1))
            nodes = [F.elem(v) for v in rng.sample(range(p), i + 1)]
            K_ = vm.kappa_matrix(nodes)
            V = vm.vandermonde_matrix(nodes)
            if not _is_identity(sf.matmul(K_, V), F.elem(1)):
                return {"p": p, "nodes": [str(x) for x in nodes]}
    return None


def _vandermonde_case(a, i, j, k):
    value, certificate = vm.hyperderiv_via_vandermonde(a, i, j, k)
    return certificate and value == hd.hyperderivative(a, j).twist(k)


@check('vandermonde', 'hyperderiv_via_vandermonde')
def hyperderivatives_from_twists(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        for a in _all_polys(F, 3):
            for i in range(max(a.degree, 0), 4):
                for j in range(i + 1):
                    for k in range(4):
                        if not _vandermonde_case(a, i, j, k):
                            return {"q": q, "a": str(a), "i": i, "j": j, "k": k}
    for q in (4, 5):
        F = GF(q)
        for _ in range(100):
            a = _rand_poly(F, rng, 3)
            i = rng.randint(max(a.degree, 0), 3)
            j, k = rng.randint(0, i), rng.randint(0, 3)
            if not _vandermonde_case(a, i, j, k):
                return {"q": q, "a": str(a), "i": i, "j": j, "k": k}
    return None


# --- Carlitz module ---------------------------------------------------------------------

@check('carlitz', 'carlitz_of')
def ring_homomorphism(ctx, rng):
    for q in (2, 3, 4, 5):
        F = GF(q)
        for _ in range(100):
            a, b = _rand_poly(F, rng, 3), _rand_poly(F, rng, 3)
            if cz.carlitz_of(a * b) != cz.carlitz_of(a) * cz.carlitz_of(b):
                return {"q": q, "a": str(a), "b": str(b), "law": "product"}
            if cz.carlitz_of(a + b) != cz.carlitz_of(a) + cz.carlitz_of(b):
                return {"q": q, "a": str(a), "b": str(b), "law": "sum"}
    return None


def _bracket_agree(a):
    for k in range(max(a.degree, 0) + 2):
        d = cz.bracket_direct(a, k)
        if d != cz.bracket_carlitz_formula(a, k) or d != cz.bracket_hyper_formula(a, k):
            return k
    return None


@check('carlitz', 'bracket_direct')
def bracket_agreement(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        for a in _monic_polys(F, 4):
            k = _bracket_agree(a)
            if k is not None:
                return {"q": q, "a": str(a), "k": k}
        for m in range(9):
            for k in range(m + 1):
                if cz.bracket_theta_power(F, m, k) != cz.bracket_direct(PolyA.monomial(F, m), k):
                    return {"q": q, "m": m, "k": k, "route": "theta power"}
    for q in (4, 5):
        F = GF(q)
        for _ in range(30):
            a = _rand_poly(F, rng, 4)
            if a:
                a = a.scale(rng.randrange(1, q))
            k = _bracket_agree(a)
            if k is not None:
                return {"q": q, "a": str(a), "k": k}
    return None


@check('carlitz', 'mu_expand')
def mu_coefficients(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        for a in _monic_polys(F, 5 if q == 2 else 4):
            coeffs = cz.mu_expand(a)
            rebuilt = MultiPoly.zero(Fq(F))
            for k, c in enumerate(coeffs):
                rebuilt = rebuilt + cz.mu_basis(F, k) * MultiPoly.from_polya(c)
            if rebuilt != MultiPoly.from_polya(a, 't'):
                return {"q": q, "a": str(a)}
    return None


@check('carlitz', 'exp_c')
def exp_log_inverse(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        N = q ** 3
        zvar = MultiPoly.var(A(F), 'z')
        z = TruncSeries.from_multipoly(zvar, N)
        zk = z.change_ring(K(F))
        if cz.exp_c(cz.log_c(z)) != zk or cz.log_c(cz.exp_c(z)) != zk:
            return {"q": q, "law": "mutual inverse"}
        th = PolyA.theta(F)
        for a in (th, th ** 2 + 1, th ** 3 + th):
            az = TruncSeries.from_multipoly(zvar.scale(a), N)
            if cz.exp_c(az) != cz.carlitz_eval(a, cz.exp_c(z)):
                return {"q": q, "a": str(a), "law": "exp(a z) = C_a(exp z)"}
    return None


@check('carlitz', 'bracket_carlitz_formula')
def carlitz_formula_integral(ctx, rng):
    for _ in range(30):
        a = _rand_poly(ctx, rng, 5)
        for k in range(max(a.degree, 0) + 1):
            cz.bracket_carlitz_formula(a, k)  # raises if a denominator survives
    return None


# --- power sums ---------------------------------------------------------------------

@check('powersums', 'sivanish_predicate')
def vanishing(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        for i in range(4):
            for k in range(41):
                if ps.sivanish_predicate(q, i, k) and ps.s_brute(F, i, k):
                    return {"q": q, "i": i, "k": k}
    return None


@check('powersums', 's_closed')
def carlitz_lee(ctx, rng):
    F = GF(3)
    for i in range(4):
        for s in (1, 2):
            for ells in itertools.combinations_with_replacement(range(i + 3), s):
                k = ps.power_sum_exponent(3, ells)
                if ps.s_closed(F, i, ells) != ps.s_brute(F, i, k):
                    return {"q": 3, "i": i, "ells": list(ells)}
    return None


@check('powersums', 'angles_pellarin_both_sides')
def angles_pellarin(ctx, rng):
    for q, i, s in ((3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2), (4, 2, 2), (5, 1, 3)):
        lhs, rhs = ps.angles_pellarin_both_sides(GF(q), i, s)
        if lhs != rhs:
            return {"q": q, "i": i, "s": s}
    return None


@check('powersums', 'h_closed')
def hyper_power_sums(ctx, rng):
    grids = [(3, i, s) for i in (1, 2, 3) for s in (1, 2)] + [(2, i, 1) for i in (1, 2, 3)]
    for q, i, s in grids:
        F = GF(q)
        for js in itertools.product(range(i + 1), repeat=s):
            for mus in itertools.product(range(i + 2), repeat=s):
                pairs = list(zip(js, mus))
                closed = ps.h_closed(F, i, pairs)
                if closed != ps.h_brute(F, i, pairs):
                    return {"q": q, "i": i, "pairs": pairs}
                if s == 1 and ps.h_closed_simplified(F, i, js[0], mus[0]) != closed:
                    return {"q": q, "i": i, "pairs": pairs, "form": "bracket form"}
    return None


@check('powersums', 'h_closed')
def repeated_pair_form(ctx, rng):
    F = GF(3)
    for i in (1, 2, 3):
        for j in range(i + 1):
            for s in (1, 2):
                if ps.h_closed_repeated(F, i, j, s) != ps.h_closed(F, i, [(j, 0)] * s):
                    return {"i": i, "j": j, "s": s}
    return None


@check('powersums', 's_closed')
def specialization(ctx, rng):
    F = GF(3)
    for i in (1, 2):
        for s in (1, 2):
            rhs = ps.angles_pellarin_rhs(F, i, s)
            for ells in itertools.product(range(i, i + 3), repeat=s):
                point = {f't{r + 1}': RatFun.from_poly(PolyA.monomial(F, 3 ** ell)) for r, ell in enumerate(ells)}
                if rhs.evaluate(point) != ps.s_closed(F, i, ells):
                    return {"i": i, "ells": list(ells)}
    return None


# --- log-algebraicity ---------------------------------------------------------------

@check('logalg', 'lambda_closed_single')
def lambda_agreement(ctx, rng):
    for q in (2, 3):
        F = GF(q)
        for i in range(4):
            for mu in range(4):
                if la.lambda_closed_single(F, i, mu) != la.lambda_brute(F, i, q ** mu):
                    return {"q": q, "i": i, "mu": mu}
    F = GF(3)
    for i in range(3):
        for mus in itertools.combinations_with_replacement(range(3), 2):
            if la.lambda_closed_multi(F, i, mus) != la.lambda_brute(F, i, sum(3 ** m for m in mus)):
                return {"q": 3, "i": i, "mus": list(mus)}
    return None


_THAKUR_GRID = ((3, (1, 2, 3, 4, 6, 9, 10, 12, 18, 27), 27),
                (2, (1, 2, 4, 8), 16),
                (5, (1, 2, 3, 4, 5, 6, 25, 30), 25))


@check('logalg', 'verify_log_algebraicity')
def thakur_vs_series(ctx, rng):
    for q, ms, N in _THAKUR_GRID:
        for m in ms:
            r = la.verify_log_algebraicity(GF(q), m, N)
            if not r.passed:
                return {"q": q, "m": m, "N": N, "match": r.match, "integral": r.integral}
    return None


@check('logalg', 'special_poly_linear')
def a_linearity(ctx, rng):
    F = GF(3)
    N = 27
    ring = A(F)
    x = MultiPoly.var(ring, 'x')
    for _ in range(10):
        b = _rand_poly(F, rng, 2)
        m = rng.choice((1, 2, 3, 4, 6))
        beta = (x ** m).scale(b) if b else MultiPoly.zero(ring)
        series = la.special_poly_linear(F, beta, N)
        thakur = la.special_poly_linear(F, beta, N, path='thakur')
        if series != thakur:
            return {"b": str(b), "m": m}
    return None
