"""Log-algebraicity: the truncated series exp_C(sum_i lambda_i z^(q^i)), the closed
form of the special polynomials P_m(x, z) for small base-q digit sum, and a
report comparing the two."""

from __future__ import annotations

import dataclasses
import functools
import itertools
import time

from .carlitz import carlitz_eval, carlitz_poly, exp_c
from .errors import ResourceError, UnsupportedExponentError, UsageError
from .multipoly import A, FiniteFieldRing, K, MultiPoly
from .parallel import sum_over_monic
from .poly import PolyA, RatFun, carlitz_lcm
from .powersums import sigma_q
from .series import TruncSeries
from .symfun import esym


def digit_multiset(m: int, q: int) -> list:
    """Positions of the base-q digits of m, each repeated by its digit value."""
    if m < 0:
        raise UsageError("m must be >= 0")
    out, pos = [], 0
    while m:
        m, d = divmod(m, q)
        out.extend([pos] * d)
        pos += 1
    return out


def default_order(q: int) -> int:
    return q ** 3 if q <= 3 else q ** 2


# --- lambda_i(m) -----------------------------------------------------------------

def _lambda_term(m, a):
    return carlitz_poly(a) ** m, a


def lambda_brute(ctx, i: int, m: int, cap=None) -> MultiPoly:
    """sum over monic a of degree i of C_a(x)^m / a, as a polynomial over K in x."""
    if i < 0 or m < 0:
        raise UsageError("need i >= 0 and m >= 0")
    return sum_over_monic(ctx, i, functools.partial(_lambda_term, m), kind='poly', cap=cap)


def _theta_powers(ctx, mu):
    return [PolyA.monomial(ctx, ctx.q ** n) for n in range(mu)]


def _lambda_factor(ctx, i, mu) -> MultiPoly:
    # sum_d (-1)^(mu-d) e_{mu,mu-d}(theta, ..., theta^(q^(mu-1))) C_{theta^d}(x)^(q^i), over A
    nodes = _theta_powers(ctx, mu)
    one = PolyA.one(ctx)
    out = MultiPoly.zero(A(ctx))
    for d in range(mu + 1):
        e = esym(nodes, mu - d, one)
        if (mu - d) % 2:
            e = -e
        out = out + carlitz_poly(PolyA.monomial(ctx, d)).frobenius(i).scale(e)
    return out


def _over_l(ctx, i, f: MultiPoly) -> MultiPoly:
    inv_l = RatFun(PolyA.one(ctx), carlitz_lcm(ctx, i))
    return f.change_ring(K(ctx)).scale(inv_l)


def lambda_closed_single(ctx, i: int, mu: int) -> MultiPoly:
    """Closed form of lambda_i(q^mu) over K in x."""
    if i < 0 or mu < 0:
        raise UsageError("need i >= 0 and mu >= 0")
    return _over_l(ctx, i, _lambda_factor(ctx, i, mu))


def lambda_closed_multi(ctx, i: int, mus) -> MultiPoly:
    """Closed form of lambda_i(q^mu_1 + ... + q^mu_s) for 1 <= s <= q - 1."""
    mus = list(mus)
    if not 1 <= len(mus) <= ctx.q - 1:
        raise UsageError(f"need 1 <= s <= q-1 = {ctx.q - 1} digit positions, got {len(mus)}")
    if i < 0 or any(mu < 0 for mu in mus):
        raise UsageError("need i >= 0 and every mu >= 0")
    prod = MultiPoly.const(A(ctx), 1)
    for mu in mus:
        prod = prod * _lambda_factor(ctx, i, mu)
    return _over_l(ctx, i, prod)


# --- the series side ---------------------------------------------------------------

def _anderson_series(ctx, N, lam):
    """exp_C(sum_{q^i < N} lam(i) z^(q^i)) mod z^N, and the largest i summed."""
    ring = K(ctx)
    coeffs = {}
    i = 0
    while ctx.q ** i < N:
        try:
            coeffs[ctx.q ** i] = lam(i)
        except ResourceError as exc:
            raise ResourceError(f"{exc}; completed degrees up to {i - 1}",
                                cap=exc.cap, completed=i - 1) from exc
        i += 1
    series = TruncSeries(ring, N, coeffs)
    return exp_c(series), i - 1


def special_poly_series(ctx, m: int, N: int | None = None, cap=None) -> TruncSeries:
    """exp_C(sum_{q^i < N} lambda_i(m) z^(q^i)) mod z^N."""
    if m < 0:
        raise UsageError("m must be >= 0")
    N = default_order(ctx.q) if N is None else N
    return _anderson_series(ctx, N, lambda i: lambda_brute(ctx, i, m, cap))[0]


# --- the closed form ---------------------------------------------------------------

def _check_digits(ctx, m):
    if m <= 0:
        raise UnsupportedExponentError(f"no closed form for m = {m}: need m >= 1")
    s = sigma_q(m, ctx.q)
    if s > ctx.q - 1:
        raise UnsupportedExponentError(
            f"no closed form for m = {m}: its base-{ctx.q} digit sum {s} exceeds q-1 = {ctx.q - 1}")
    return digit_multiset(m, ctx.q)


def special_poly_thakur(ctx, m: int, trunc: int | None = None) -> MultiPoly:
    """P_m(x, z) = sum over (d_1..d_s) of C_b((prod_r C_{theta^d_r}(x)) z), with
    b = (-1)^(sum mu - sum d) prod_r e_{mu_r, mu_r - d_r}(theta, ..., theta^(q^(mu_r - 1))).

    With ``trunc = N`` only the terms below z^N are formed.
    """
    mus = _check_digits(ctx, m)
    one = PolyA.one(ctx)
    ring = A(ctx)
    z = MultiPoly.var(ring, 'z')
    # terms sharing the multiset of d's share their argument; C_b is additive in b
    grouped = {}
    for ds in itertools.product(*(range(mu + 1) for mu in mus)):
        b = one
        for mu, d in zip(mus, ds):
            b = b * esym(_theta_powers(ctx, mu), mu - d, one)
        if (sum(mus) - sum(ds)) % 2:
            b = -b
        key = tuple(sorted(ds))
        grouped[key] = grouped[key] + b if key in grouped else b
    out = MultiPoly.zero(ring)
    limit = None if trunc is None else ('z', trunc)
    for ds, b in grouped.items():
        if not b:
            continue
        arg = z
        for d in ds:
            arg = arg * carlitz_poly(PolyA.monomial(ctx, d))
        out = out + carlitz_eval(b, arg, limit)
    return out


def _as_series(f: MultiPoly, N: int) -> TruncSeries:
    ctx = f.ring.ctx
    return TruncSeries.from_multipoly(f.change_ring(K(ctx)), N)


# --- general beta ---------------------------------------------------------------------

def _beta_term(beta, a):
    return beta.subs('x', carlitz_poly(a)), a


def special_poly_linear(ctx, beta: MultiPoly, N: int | None = None, path: str = 'series',
                        cap=None) -> TruncSeries:
    """P(beta, z) mod z^N for beta in A[x].

    ``path='series'`` sums beta(C_a(x))/a directly; ``path='thakur'`` writes beta
    as sum_m b_m x^m and returns sum_m C_{b_m}(P_m), which needs every sigma_q(m) <= q-1.
    """
    N = default_order(ctx.q) if N is None else N
    if isinstance(beta.ring, FiniteFieldRing):
        beta = beta.change_ring(A(ctx))
    if set(beta.vars) - {'x'}:
        raise UsageError("beta must be a polynomial in x alone")
    if path == 'series':
        return _anderson_series(
            ctx, N, lambda i: sum_over_monic(ctx, i, functools.partial(_beta_term, beta),
                                             kind='poly', cap=cap))[0]
    if path == 'thakur':
        out = MultiPoly.zero(A(ctx))
        for m, coeff in sorted(beta.as_univariate('x').items()):
            b = coeff.constant_value()
            out = out + carlitz_eval(b, special_poly_thakur(ctx, m, N), ('z', N))
        return _as_series(out, N)
    raise UsageError(f"unknown path {path!r}; expected 'series' or 'thakur'")


# --- verification report ------------------------------------------------------------

@dataclasses.dataclass
class LogAlgReport:
    m: int
    q: int
    N: int
    match: bool
    integral: bool
    poly: MultiPoly
    max_i: int
    millis: float

    @property
    def passed(self) -> bool:
        return self.match and self.integral

    def to_dict(self) -> dict:
        from .serialize import to_json
        return {"m": self.m, "q": self.q, "N": self.N, "match": self.match,
                "integral": self.integral, "poly": to_json(self.poly),
                "max_i": self.max_i, "millis": self.millis}


def _all_integral(series: TruncSeries) -> bool:
    return all(c.is_integral() for coeff in series.coeffs.values() for c in coeff.terms.values())


def verify_log_algebraicity(ctx, m: int, N: int | None = None, cap=None) -> LogAlgReport:
    """Compare the closed form of P_m with the series, modulo z^N."""
    N = default_order(ctx.q) if N is None else N
    start = time.perf_counter()
    closed = special_poly_thakur(ctx, m, trunc=N)
    series, max_i = _anderson_series(ctx, N, lambda i: lambda_brute(ctx, i, m, cap))
    match = _as_series(closed, N) == series
    # the closed form is built in A; the series is built in K, so its
    # denominators are what integrality is about
    integral = isinstance(closed.ring, type(A(ctx))) and _all_integral(series)
    millis = (time.perf_counter() - start) * 1000.0
    return LogAlgReport(m, ctx.q, N, match, integral, closed, max_i, round(millis, 3))
