"""Power sums over the monic polynomials of a fixed degree: brute force and
closed forms for S_i(k), the sums of a(t_1)...a(t_s)/a, and sums of products
of hyperderivatives."""

from __future__ import annotations

import functools

from .errors import DomainError, UsageError
from .hyperderiv import hyperderivative
from .multipoly import A, K, MultiPoly
from .parallel import lift_to_a, sum_over_monic
from .poly import PolyA, RatFun, carlitz_factorial, carlitz_lcm, theta_bracket
from .symfun import esym


def _q_of(q_or_ctx) -> int:
    return q_or_ctx if isinstance(q_or_ctx, int) else q_or_ctx.q


def _check_i(i):
    if i < 0:
        raise UsageError("degree i must be >= 0")


# --- S_i(k) ------------------------------------------------------------------

def _product_term(js, ks, a):
    ctx = a.ctx
    num, den = PolyA.one(ctx), PolyA.one(ctx)
    for j, k in zip(js, ks):
        d = hyperderivative(a, j)
        if k >= 0:
            num = num * d ** k
        elif not d:
            raise DomainError(f"hyperderivative of order {j} of {a} is zero under a negative power")
        else:
            den = den * d ** (-k)
    return num, den


def hyper_power_sum(ctx, i: int, js, ks, cap=None) -> RatFun:
    """H_i = sum over monic a of degree i of prod_r d^{j_r}(a)^{k_r}; negative k_r allowed."""
    _check_i(i)
    js, ks = tuple(js), tuple(ks)
    if len(js) != len(ks):
        raise UsageError("need as many exponents as hyperderivative orders")
    if any(j < 0 for j in js):
        raise UsageError("hyperderivative orders must be >= 0")
    return sum_over_monic(ctx, i, functools.partial(_product_term, js, ks), cap=cap)


def s_brute(ctx, i: int, k: int, cap=None) -> RatFun:
    """S_i(k) = sum of a^k over the monic a of degree i."""
    return hyper_power_sum(ctx, i, (0,), (k,), cap)


def sigma_q(k: int, q) -> int:
    """The sum of the base-q digits of k."""
    q = _q_of(q)
    if k < 0:
        raise UsageError("k must be >= 0")
    s = 0
    while k:
        k, d = divmod(k, q)
        s += d
    return s


def sivanish_predicate(q, i: int, k: int) -> bool:
    """True when S_i(k) is forced to vanish: sigma_q(k) < i(q-1) or k < q^i - 1."""
    q = _q_of(q)
    if k < 0:
        raise UsageError("k must be >= 0")
    return sigma_q(k, q) < i * (q - 1) or k < q ** i - 1


def s_closed(ctx, i: int, ells) -> RatFun:
    """S_i(q^l_1 + ... + q^l_s - 1) for 1 <= s <= q - 1, in product form."""
    _check_i(i)
    ells = tuple(ells)
    if not 1 <= len(ells) <= ctx.q - 1:
        raise UsageError(f"need 1 <= s <= q-1 = {ctx.q - 1} exponents, got {len(ells)}")
    if any(ell < 0 for ell in ells):
        raise UsageError("exponents must be >= 0")
    if any(ell < i for ell in ells):
        return RatFun.zero(ctx)
    num, den = PolyA.one(ctx), carlitz_lcm(ctx, i)
    for ell in ells:
        num = num * carlitz_factorial(ctx, ell)
        den = den * carlitz_factorial(ctx, ell - i).twist(i)
    return RatFun(num, den)


def power_sum_exponent(q, ells) -> int:
    q = _q_of(q)
    return sum(q ** ell for ell in ells) - 1


# --- sums of a(t_1)...a(t_s)/a ------------------------------------------------

def _t_names(s):
    return [f't{r}' for r in range(1, s + 1)]


def _ap_term(s, a):
    ctx = a.ctx
    num = MultiPoly.const(A(ctx), 1)
    for name in _t_names(s):
        num = num * lift_to_a(a, name)
    return num, a


def angles_pellarin_lhs(ctx, i: int, s: int, cap=None) -> MultiPoly:
    _check_i(i)
    if not 0 <= s <= ctx.q - 1:
        raise UsageError(f"need 0 <= s <= q-1 = {ctx.q - 1}, got {s}")
    return sum_over_monic(ctx, i, functools.partial(_ap_term, s), kind='poly', cap=cap)


def angles_pellarin_rhs(ctx, i: int, s: int) -> MultiPoly:
    """(1/L_i) prod_r prod_{nu < i} (t_r - theta^(q^nu)) over K."""
    _check_i(i)
    if not 0 <= s <= ctx.q - 1:
        raise UsageError(f"need 0 <= s <= q-1 = {ctx.q - 1}, got {s}")
    ring = K(ctx)
    out = MultiPoly.const(ring, RatFun(PolyA.one(ctx), carlitz_lcm(ctx, i)))
    for name in _t_names(s):
        t = MultiPoly.var(ring, name)
        for nu in range(i):
            out = out * (t - RatFun.from_poly(PolyA.monomial(ctx, ctx.q ** nu)))
    return out


def angles_pellarin_both_sides(ctx, i: int, s: int, cap=None):
    """(brute-force left side, product right side), both MultiPoly over K in t1..ts."""
    return angles_pellarin_lhs(ctx, i, s, cap), angles_pellarin_rhs(ctx, i, s)


# --- hyperderivative power sums -------------------------------------------------

def _check_pairs(pairs):
    pairs = tuple((int(j), int(mu)) for j, mu in pairs)
    if any(j < 0 or mu < 0 for j, mu in pairs):
        raise UsageError("orders j and exponents mu must be >= 0")
    return pairs


def h_brute(ctx, i: int, pairs, signed: bool = True, cap=None) -> RatFun:
    """sum_a prod_r d^{j_r}(a)^(q^mu_r), divided by a when ``signed``."""
    pairs = _check_pairs(pairs)
    js = [j for j, _ in pairs]
    ks = [ctx.q ** mu for _, mu in pairs]
    if signed:
        js.append(0)
        ks.append(-1)
    return hyper_power_sum(ctx, i, js, ks, cap)


def _check_closed(ctx, i, pairs):
    if i < 1:
        raise UsageError("the closed form needs i >= 1")
    if not 1 <= len(pairs) <= ctx.q - 1:
        raise UsageError(f"the closed form needs 1 <= s <= q-1 = {ctx.q - 1}, got s = {len(pairs)}")
    for j, _ in pairs:
        if j > i:
            raise UsageError(f"the closed form needs j <= i, got j = {j}, i = {i}")


def _signed(v, n):
    return -v if n % 2 else v


def h_closed(ctx, i: int, pairs) -> RatFun:
    """(1/L_i) prod_r (-1)^(i-j_r) e_{i,i-j_r}(theta^(q^n) - theta^(q^mu_r) : n < i)."""
    pairs = _check_pairs(pairs)
    _check_closed(ctx, i, pairs)
    one = PolyA.one(ctx)
    num = one
    for j, mu in pairs:
        top = PolyA.monomial(ctx, ctx.q ** mu)
        diffs = [PolyA.monomial(ctx, ctx.q ** n) - top for n in range(i)]
        num = num * _signed(esym(diffs, i - j, one), i - j)
    return RatFun(num, carlitz_lcm(ctx, i))


def h_closed_simplified(ctx, i: int, j: int, mu: int) -> RatFun:
    """The single-pair closed form written with the brackets [n].

    For mu >= i the arguments are -[mu], -[mu-1]^q, ..., -[mu-i+1]^(q^(i-1)).
    For mu < i the vanishing argument is dropped, leaving
    -[mu], ..., -[1]^(q^(mu-1)), [1]^(q^mu), ..., [i-mu-1]^(q^mu).
    """
    if i < 1 or not 0 <= j <= i or mu < 0:
        raise UsageError(f"need i >= 1, 0 <= j <= i, mu >= 0; got i={i}, j={j}, mu={mu}")
    one = PolyA.one(ctx)
    if mu >= i:
        args = [-theta_bracket(ctx, mu - n).twist(n) for n in range(i)]
    else:
        args = [-theta_bracket(ctx, mu - n).twist(n) for n in range(mu)]
        args += [theta_bracket(ctx, n).twist(mu) for n in range(1, i - mu)]
    e = esym(args, i - j, one)
    return RatFun(_signed(e, i - j), carlitz_lcm(ctx, i))


def h_closed_repeated(ctx, i: int, j: int, s: int) -> RatFun:
    """The pair (j, 0) repeated s times: ((-1)^(s(i-j)) / L_i) e_{i-1,i-j}([1], ..., [i-1])^s."""
    if i < 1 or not 0 <= j <= i or not 1 <= s <= ctx.q - 1:
        raise UsageError(f"need i >= 1, 0 <= j <= i, 1 <= s <= q-1; got i={i}, j={j}, s={s}")
    one = PolyA.one(ctx)
    brackets = [theta_bracket(ctx, n) for n in range(1, i)]
    e = esym(brackets, i - j, one) ** s
    return RatFun(_signed(e, s * (i - j)), carlitz_lcm(ctx, i))
