"""Slow, independent reference computations used as test oracles.

None of these call the routines they check: field arithmetic is redone on
coefficient lists, binomials come from math.comb, the Carlitz module is built
by iterating C_theta on additive polynomials, and matrix inverses come from
Gauss-Jordan elimination.
"""

import itertools
import math

from carlitz_lab.poly import PolyA


# --- F_q as coefficient lists over F_p ---------------------------------------------

def fp_poly_mulmod(a, b, modulus, p):
    """Multiply two coordinate vectors and reduce by the monic modulus (ascending lists)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(modulus) - 1
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for r in range(e + 1):
                prod[d - e + r] = (prod[d - e + r] - c * modulus[r]) % p
    out = prod[:e] + [0] * (e - len(prod[:e]))
    return out


def fq_mul_coords(ctx, x, y):
    if ctx.e == 1:
        return [(x[0] * y[0]) % ctx.p]
    return fp_poly_mulmod(list(x), list(y), list(ctx.modulus), ctx.p)


# --- polynomials over F_q ----------------------------------------------------------

def schoolbook(f: PolyA, g: PolyA) -> PolyA:
    ctx = f.ctx
    if not f or not g:
        return PolyA.zero(ctx)
    out = [0] * (len(f.c) + len(g.c) - 1)
    for i, a in enumerate(f.c):
        for j, b in enumerate(g.c):
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return PolyA(ctx, [ctx.elem(c) for c in out])


def power_by_repetition(f: PolyA, n: int) -> PolyA:
    out = PolyA.one(f.ctx)
    for _ in range(n):
        out = schoolbook(out, f)
    return out


def binom_mod(n, j, p):
    return math.comb(n, j) % p if 0 <= j <= n else 0


def hyperderivative_oracle(f: PolyA, j: int) -> PolyA:
    """Coefficient of X^j in f(theta + X), expanding (theta + X)^n by repeated multiplication."""
    ctx = f.ctx
    # polynomials in X with PolyA coefficients, as lists
    result = [PolyA.zero(ctx)]
    power = [PolyA.one(ctx)]
    theta = PolyA.theta(ctx)
    for n, c in enumerate(f.c):
        if c:
            for d, coeff in enumerate(power):
                while len(result) <= d:
                    result.append(PolyA.zero(ctx))
                result[d] = result[d] + coeff.scale(c)
        nxt = [PolyA.zero(ctx)] * (len(power) + 1)
        for d, coeff in enumerate(power):
            nxt[d] = nxt[d] + schoolbook(coeff, theta)
            nxt[d + 1] = nxt[d + 1] + coeff
        power = nxt
    return result[j] if j < len(result) else PolyA.zero(ctx)


# --- the Carlitz module by iteration ------------------------------------------------

def _additive_mul_theta(ctx, f):
    """C_theta applied to an additive polynomial {exponent: PolyA}: theta*f + f^q."""
    theta = PolyA.theta(ctx)
    out = {}
    for e, c in f.items():
        out[e] = out.get(e, PolyA.zero(ctx)) + schoolbook(theta, c)
    # f^q expanded by multiplying q copies of f
    power = {0: PolyA.one(ctx)}
    for _ in range(ctx.q):
        nxt = {}
        for e1, c1 in power.items():
            for e2, c2 in f.items():
                nxt[e1 + e2] = nxt.get(e1 + e2, PolyA.zero(ctx)) + schoolbook(c1, c2)
        power = {e: c for e, c in nxt.items() if c}
    for e, c in power.items():
        out[e] = out.get(e, PolyA.zero(ctx)) + c
    return {e: c for e, c in out.items() if c}


def carlitz_brackets_oracle(a: PolyA) -> dict:
    """{k: <a>_k} from C_a(x) = sum_n a_n C_theta^n(x)."""
    ctx = a.ctx
    total = {}
    f = {1: PolyA.one(ctx)}
    for n, c in enumerate(a.c):
        if n:
            f = _additive_mul_theta(ctx, f)
        if c:
            for e, v in f.items():
                total[e] = total.get(e, PolyA.zero(ctx)) + v.scale(c)
    out = {}
    for e, v in total.items():
        if v:
            k = round(math.log(e, ctx.q))
            assert ctx.q ** k == e, "C_a(x) must be additive"
            out[k] = v
    return out


def carlitz_on(b, f):
    """C_b(f) = sum_k <b>_k f^(q^k) for a MultiPoly f, brackets from the oracle above."""
    out = f.zero(f.ring)
    for k, c in carlitz_brackets_oracle(b).items():
        out = out + (f ** (b.ctx.q ** k)).scale(f.ring.coerce(c))
    return out


# --- enumeration and sums ---------------------------------------------------------

def monic_by_product(ctx, i):
    """All monic degree-i polynomials from itertools.product over coefficient vectors."""
    for tail in itertools.product(range(ctx.q), repeat=i):
        yield PolyA(ctx, [ctx.elem(c) for c in tail] + [ctx.elem(1)])


def naive_fraction_sum(terms):
    """Sum RatFun terms one at a time (each addition reduces)."""
    terms = list(terms)
    total = terms[0] * 0
    for t in terms:
        total = total + t
    return total


# --- symmetric functions -----------------------------------------------------------

def esym_by_subsets(values, j, one):
    if j < 0 or j > len(values):
        return one * 0
    total = one * 0
    for combo in itertools.combinations(values, j):
        term = one
        for x in combo:
            term = term * x
        total = total + term
    return total


def hsym_by_multisets(values, j, one):
    if j < 0:
        return one * 0
    total = one * 0
    for combo in itertools.combinations_with_replacement(values, j):
        term = one
        for x in combo:
            term = term * x
        total = total + term
    return total


# --- linear algebra ---------------------------------------------------------------

def gauss_inverse(M):
    """Inverse of a square matrix over a field by Gauss-Jordan elimination."""
    n = len(M)
    one = M[0][0] * 0 + 1
    zero = one * 0
    A = [list(row) + [one if r == c else zero for c in range(n)] for r, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != zero)
        A[col], A[piv] = A[piv], A[col]
        inv = one / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != zero:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def matmul(X, Y):
    return [[sum((X[r][k] * Y[k][c] for k in range(1, len(Y))), X[r][0] * Y[0][c])
             for c in range(len(Y[0]))] for r in range(len(X))]
