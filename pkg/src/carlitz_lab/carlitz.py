"""The Carlitz module: twisted polynomials, the coefficients <a>_k of C_a by four
independent routes, the mu_k basis, and the exponential and logarithm as
truncated series."""

from __future__ import annotations

from .errors import ConsistencyError, UsageError
from .hyperderiv import hyperderivative
from .multipoly import THETA, A, FiniteFieldRing, FractionField, Fq, K, MultiPoly, convert
from .poly import PolyA, RatFun, carlitz_factorial, carlitz_lcm, theta_bracket
from .series import TruncSeries
from .symfun import hsym


class TwistedPoly:
    """sum_m a_m tau^m over A with tau c = c^q tau."""

    __slots__ = ('ctx', 'coeffs')

    def __init__(self, ctx, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def tau(cls, ctx, m: int = 1) -> TwistedPoly:
        return cls(ctx, [PolyA.zero(ctx)] * m + [PolyA.one(ctx)])

    @classmethod
    def scalar(cls, a: PolyA) -> TwistedPoly:
        return cls(a.ctx, [a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, m: int) -> PolyA:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else PolyA.zero(self.ctx)

    def __add__(self, other):
        if isinstance(other, PolyA):
            other = TwistedPoly.scalar(other)
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.ctx, [self.coefficient(m) + other.coefficient(m) for m in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TwistedPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyA):
            other = TwistedPoly.scalar(other)
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        out = [PolyA.zero(self.ctx)] * (len(self.coeffs) + len(other.coeffs) - 1 or 0)
        for m, a in enumerate(self.coeffs):
            if not a:
                continue
            for n, b in enumerate(other.coeffs):
                if b:
                    out[m + n] = out[m + n] + a * b.twist(m)
        return TwistedPoly(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, PolyA):
            return TwistedPoly.scalar(other) * self
        return NotImplemented

    def __call__(self, f):
        """Apply to a MultiPoly (or series) as an F_q-linear operator: sum a_m f^(q^m)."""
        return _apply(self.coeffs, f, None)

    def __eq__(self, other):
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TwistedPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return '0'
        parts = []
        for m, a in enumerate(self.coeffs):
            if a:
                op = '' if m == 0 else ('τ' if m == 1 else f'τ^{m}')
                cs = str(a)
                if not op:
                    parts.append(cs)
                elif cs == '1':
                    parts.append(op)
                else:
                    parts.append(f'({cs})*{op}')
        return ' + '.join(parts)


# --- coefficients of C_a ---------------------------------------------------------

def carlitz_of(a: PolyA) -> TwistedPoly:
    """C_a as a twisted polynomial, by Horner's rule in C_theta = theta + tau."""
    ctx = a.ctx
    c_theta = TwistedPoly(ctx, [PolyA.theta(ctx), PolyA.one(ctx)])
    out = TwistedPoly(ctx)
    for c in reversed(a.c):
        out = out * c_theta + PolyA.const(ctx, c)
    return out


def _check_k(k):
    if k < 0:
        raise UsageError("k must be >= 0")


def bracket_direct(a: PolyA, k: int) -> PolyA:
    """<a>_k read off from the expansion of C_a."""
    _check_k(k)
    return carlitz_of(a).coefficient(k)


def bracket_carlitz_formula(a: PolyA, k: int) -> PolyA:
    """<a>_k = sum_{j <= k} a^(q^j) / (D_j L_{k-j}^(q^j)), evaluated in K."""
    _check_k(k)
    ctx = a.ctx
    if k > a.degree:
        return PolyA.zero(ctx)
    dens = [carlitz_factorial(ctx, j) * carlitz_lcm(ctx, k - j).twist(j) for j in range(k + 1)]
    # every denominator divides D_k; each cofactor is still checked, so a failure
    # falls back to reduced fractions instead of a wrong answer
    common = carlitz_factorial(ctx, k)
    cofactors = [divmod(common, den) for den in dens]
    if all(not r for _, r in cofactors):
        num = PolyA.zero(ctx)
        for j, (cof, _) in enumerate(cofactors):
            num = num + a.twist(j) * cof
        quo, rem = divmod(num, common)
        if rem:
            raise ConsistencyError(f"<a>_{k} came out non-integral: {RatFun(num, common)}")
        return quo
    total = RatFun.zero(ctx)
    for j, den in enumerate(dens):
        total = total + RatFun(a.twist(j), den)
    if not total.is_integral():
        raise ConsistencyError(f"<a>_{k} came out non-integral: {total}")
    return total.to_poly()


def bracket_hyper_formula(a: PolyA, k: int) -> PolyA:
    """<a>_k = sum_{j >= k} d^j(a) h_{k, j-k}([1], ..., [k])."""
    _check_k(k)
    ctx = a.ctx
    brackets = [theta_bracket(ctx, n) for n in range(1, k + 1)]
    one = PolyA.one(ctx)
    total = PolyA.zero(ctx)
    for j in range(k, len(a.c)):
        d = hyperderivative(a, j)
        if d:
            total = total + d * hsym(brackets, j - k, one)
    return total


def bracket_theta_power(ctx, m: int, k: int) -> PolyA:
    """<theta^m>_k = h_{k+1, m-k}(theta, theta^q, ..., theta^(q^k))."""
    if m < 0:
        raise UsageError("m must be >= 0")
    _check_k(k)
    if k > m:
        raise UsageError(f"need k <= m, got m={m}, k={k}")
    nodes = [PolyA.monomial(ctx, ctx.q ** n) for n in range(k + 1)]
    return hsym(nodes, m - k, PolyA.one(ctx))


# --- the mu basis --------------------------------------------------------------

def mu_basis(ctx, k: int) -> MultiPoly:
    """mu_k(t) = prod_{n < k} (t - theta^(q^n)) over F_q in {theta, t}."""
    _check_k(k)
    ring = Fq(ctx)
    t = MultiPoly.var(ring, 't')
    out = MultiPoly.const(ring, 1)
    for n in range(k):
        out = out * (t - MultiPoly.var(ring, THETA, ctx.q ** n))
    return out


def mu_expand(a: PolyA) -> list:
    """Coefficients c_k with a(t) = sum_k c_k mu_k(t), by successive division.

    Each c_k is checked against <a>_k; a mismatch raises ConsistencyError.
    """
    ctx = a.ctx
    # r(t) as a list of A-coefficients, ascending in t
    r = [PolyA.const(ctx, c) for c in a.c]
    out = []
    k = 0
    while r:
        node = PolyA.monomial(ctx, ctx.q ** k)
        # synthetic division of r by (t - node): quotient and remainder r(node)
        quot = [PolyA.zero(ctx)] * (len(r) - 1)
        acc = PolyA.zero(ctx)
        for n in range(len(r) - 1, -1, -1):
            acc = acc * node + r[n]
            if n:
                quot[n - 1] = acc
        out.append(acc)
        r = quot
        while r and not r[-1]:
            r.pop()
        k += 1
    direct = carlitz_of(a)
    for k, c in enumerate(out):
        if c != direct.coefficient(k):
            raise ConsistencyError(f"mu-coefficient {k} disagrees with <a>_{k}")
    return out


# --- applying C_a, exp_C and log_C -------------------------------------------------

def _apply(coeffs, f, trunc):
    """sum_k coeffs[k] * f^(q^k), for f a MultiPoly or TruncSeries."""
    if isinstance(f, TruncSeries):
        out = TruncSeries(f.ring, f.order, var=f.var)
        for k, c in enumerate(coeffs):
            if c:
                out = out + f.frobenius(k) * MultiPoly.const(f.ring, _coerce(c, f.ring))
        return out
    if not isinstance(f, MultiPoly):
        raise TypeError(f"cannot apply a Carlitz operator to {type(f).__name__}")
    ring = f.ring
    if isinstance(ring, FiniteFieldRing):
        ring = A(ring.ctx)
        f = f.change_ring(ring)
    out = MultiPoly.zero(ring)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        g = f.frobenius(k, trunc)
        if g:
            out = out + g.scale(_coerce(c, ring))
    return out


def _coerce(c: PolyA, ring):
    return convert(c, A(c.ctx), ring)


def carlitz_eval(a: PolyA, f, trunc=None):
    """C_a(f) = sum_k <a>_k f^(q^k).

    ``f`` is a MultiPoly (coefficients in F_q, A or K) or a TruncSeries.
    ``trunc=(var, n)`` drops terms of degree >= n in var as they are formed.
    """
    return _apply(carlitz_of(a).coeffs, f, trunc)


def carlitz_poly(a: PolyA, var: str = 'x') -> MultiPoly:
    """C_a(x) as a polynomial over A."""
    ring = A(a.ctx)
    return carlitz_eval(a, MultiPoly.var(ring, var))


def _series_of(f: TruncSeries, weights):
    ctx = f.ring.ctx
    if not f.constant_term().is_zero():
        raise UsageError("series must have zero constant term")
    ring = K(ctx)
    if not isinstance(f.ring, FractionField):
        f = TruncSeries(ring, f.order, {n: c.change_ring(ring) for n, c in f.coeffs.items()}, f.var)
    out = TruncSeries(ring, f.order, var=f.var)
    i = 0
    # f has valuation >= 1, so f^(q^i) vanishes once q^i >= order
    while ctx.q ** i < max(f.order, 1):
        w = weights(ctx, i)
        out = out + f.frobenius(i) * MultiPoly.const(ring, RatFun(PolyA.one(ctx), w))
        i += 1
    return out


def exp_c(f: TruncSeries) -> TruncSeries:
    """exp_C(f) = sum_i f^(q^i) / D_i, truncated."""
    return _series_of(f, carlitz_factorial)


def log_c(f: TruncSeries) -> TruncSeries:
    """log_C(f) = sum_i f^(q^i) / L_i, truncated."""
    return _series_of(f, carlitz_lcm)
