"""Hyperderivatives d^j/j! in theta (or any named variable), Taylor expansion at t = theta,
and the q^k-th power identity for power series over F_q."""

from __future__ import annotations

import math

from .errors import UsageError
from .multipoly import THETA, FiniteFieldRing, Fq, MultiPoly, _known_var, canon_var
from .poly import PolyA, theta_bracket


def lucas_binomial(n: int, j: int, p: int) -> int:
    """C(n, j) mod p, digit by digit in base p."""
    if j < 0 or n < 0 or j > n:
        return 0
    r = 1
    while j:
        nd, jd = n % p, j % p
        if jd > nd:
            return 0
        r = r * math.comb(nd, jd) % p
        n //= p
        j //= p
    return r


def _binom_in(ring, n, j):
    p = ring.characteristic
    return ring.from_int(lucas_binomial(n, j, p) if p else math.comb(n, j))


def hyperderivative(f, j: int, var: str = THETA):
    """The j-th hyperderivative of a PolyA (in theta) or a MultiPoly (in ``var``)."""
    if j < 0:
        raise UsageError("hyperderivative order must be >= 0")
    if isinstance(f, PolyA):
        if canon_var(var) != THETA:
            raise UsageError(f"unknown variable {var!r} for a polynomial in θ")
        if j == 0:
            return f
        ctx = f.ctx
        p = ctx.p
        out = []
        for n in range(j, len(f.c)):
            b = lucas_binomial(n, j, p)
            out.append(ctx.mul(f.c[n], ctx.from_int(b)) if b and f.c[n] else 0)
        return PolyA._raw(ctx, _trim(out))
    if isinstance(f, MultiPoly):
        var = canon_var(var)
        if var not in f.vars:
            if _known_var(var):
                return f if j == 0 else MultiPoly.zero(f.ring)
            raise UsageError(f"unknown variable {var!r}")
        if j == 0:
            return f
        ring = f.ring
        i = f.vars.index(var)
        terms = {}
        for e, c in f.terms.items():
            if e[i] < j:
                continue
            b = _binom_in(ring, e[i], j)
            if ring.is_zero(b):
                continue
            e2 = e[:i] + (e[i] - j,) + e[i + 1:]
            terms[e2] = ring.mul(c, b)
        return MultiPoly(ring, f.vars, terms)
    raise TypeError(f"cannot differentiate {type(f).__name__}")


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _as_polya(f):
    if isinstance(f, PolyA):
        return f
    if isinstance(f, MultiPoly):
        if set(f.vars) - {THETA} or not isinstance(f.ring, FiniteFieldRing):
            raise UsageError("taylor_about_theta expects a polynomial in θ over F_q")
        ctx = f.ring.ctx
        out = [0] * (f.degree(THETA) + 1)
        for e, c in f.terms.items():
            out[e[0] if e else 0] = c
        return PolyA._raw(ctx, _trim(out))
    raise TypeError(f"expected PolyA or MultiPoly, got {type(f).__name__}")


def taylor_about_theta(f, max_j: int) -> list:
    """(d^0 f, d^1 f, ..., d^max_j f): the Taylor coefficients of f(t) at t = theta."""
    f = _as_polya(f)
    return [hyperderivative(f, j) for j in range(max_j + 1)]


def taylor_reconstruct(coeffs) -> MultiPoly:
    """sum_j coeffs[j](theta) (t - theta)^j as a polynomial over F_q in {theta, t}."""
    if not coeffs:
        raise UsageError("need at least one Taylor coefficient")
    ctx = coeffs[0].ctx
    ring = Fq(ctx)
    th, t = MultiPoly.gens(ring, THETA, 't')
    step = t - th
    out = MultiPoly.zero(ring)
    power = MultiPoly.const(ring, 1)
    for c in coeffs:
        out = out + MultiPoly.from_polya(c) * power
        power = power * step
    return out


def _mul_trunc(a: PolyA, b: PolyA, n: int) -> PolyA:
    return PolyA._raw(a.ctx, _trim(list((a * b).c[:n])))


def voloch_qpower_check(g, k: int, order: int) -> bool:
    """Check g^(q^k) == sum_j d^j(g) [k]^j modulo theta^order.

    ``g`` is a PolyA holding the truncated series (terms of degree >= order
    are discarded).  The left side is computed by repeated squaring modulo
    theta^order, not by a Frobenius shortcut.
    """
    if order < 1:
        raise UsageError("truncation order must be >= 1")
    if k < 0:
        raise UsageError("k must be >= 0")
    ctx = g.ctx
    g = PolyA._raw(ctx, _trim(list(g.c[:order])))
    lhs = PolyA.one(ctx)
    base, e = g, ctx.q ** k
    while e:
        if e & 1:
            lhs = _mul_trunc(lhs, base, order)
        e >>= 1
        if e:
            base = _mul_trunc(base, base, order)

    rhs = g  # j = 0 term; [0]^0 = 1 by convention
    if k > 0:
        bk = theta_bracket(ctx, k)
        power = PolyA.one(ctx)
        for j in range(1, order):
            power = _mul_trunc(power, bk, order)
            if not power:
                break
            rhs = rhs + _mul_trunc(hyperderivative(g, j), power, order)
    return lhs == rhs
