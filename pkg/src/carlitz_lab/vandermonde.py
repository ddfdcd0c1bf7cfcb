"""Vandermonde matrices, their closed-form inverse entries, and the recovery of
hyperderivatives from q-power twists of a(t)."""

from __future__ import annotations

import functools

from .errors import SingularityError, UsageError
from .hyperderiv import _as_polya
from .multipoly import THETA, Fq, MultiPoly
from .poly import PolyA
from .symfun import esym


def vandermonde_matrix(nodes):
    """Rows (1, x_r, x_r^2, ..., x_r^i) for nodes x_0..x_i."""
    nodes = list(nodes)
    n = len(nodes)
    if n == 0:
        raise UsageError("need at least one node")
    one = nodes[0] * 0 + 1
    rows = []
    for x in nodes:
        row, v = [], one
        for _ in range(n):
            row.append(v)
            v = v * x
        rows.append(row)
    return rows


def _check_distinct(nodes):
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            if nodes[a] == nodes[b]:
                raise SingularityError(f"nodes {a} and {b} coincide ({nodes[a]})", pair=(a, b))


def kappa(i: int, j: int, ell: int, nodes):
    """Entry (j, l) of the inverse of V_i(nodes), by the elementary-symmetric formula."""
    nodes = list(nodes)
    if len(nodes) != i + 1:
        raise UsageError(f"need {i + 1} nodes, got {len(nodes)}")
    if not (0 <= j <= i and 0 <= ell <= i):
        raise UsageError(f"indices j={j}, l={ell} out of range for i={i}")
    _check_distinct(nodes)
    others = nodes[:ell] + nodes[ell + 1:]
    one = nodes[0] * 0 + 1
    num = esym(others, i - j, one)
    if (i - j) % 2:
        num = -num
    den = one
    for x in others:
        den = den * (nodes[ell] - x)
    return num / den


def kappa_matrix(nodes):
    nodes = list(nodes)
    i = len(nodes) - 1
    return [[kappa(i, j, ell, nodes) for ell in range(i + 1)] for j in range(i + 1)]


# --- specialization at nodes t^(q^m) - theta^(q^k) ----------------------------

def _carlitz_nodes(ctx, i, k):
    ring = Fq(ctx)
    q = ctx.q
    th_k = MultiPoly.var(ring, THETA, q ** k)
    return [MultiPoly.var(ring, 't', q ** m) - th_k for m in range(i + 1)]


def _t_diff(ctx, a, b):
    ring = Fq(ctx)
    q = ctx.q
    return MultiPoly.var(ring, 't', q ** a) - MultiPoly.var(ring, 't', q ** b)


def kappa_carlitz_nodes(ctx, i: int, j: int, ell: int, k: int):
    """kappa_{i j l} at nodes (t - theta^(q^k), t^q - theta^(q^k), ..., t^(q^i) - theta^(q^k)).

    Returns (numerator, denominator) as MultiPoly over F_q; the denominator
    prod_{m != l} (t^(q^l) - t^(q^m)) depends only on t.
    """
    if not (0 <= j <= i and 0 <= ell <= i):
        raise UsageError(f"indices j={j}, l={ell} out of range for i={i}")
    if k < 0:
        raise UsageError("k must be >= 0")
    nodes = _carlitz_nodes(ctx, i, k)
    others = nodes[:ell] + nodes[ell + 1:]
    one = MultiPoly.const(Fq(ctx), 1)
    num = esym(others, i - j, one)
    if (i - j) % 2:
        num = -num
    den = one
    for m in range(i + 1):
        if m != ell:
            den = den * _t_diff(ctx, ell, m)
    return num, den


@functools.lru_cache(maxsize=256)
def _weighted_numerators(ctx, i, j, k):
    # Delta(t) = prod_{m < m'} (t^(q^m') - t^(q^m)) and, for each l,
    # W_l = num_l * Delta / den_l, all over F_q in {theta, t}.
    one = MultiPoly.const(Fq(ctx), 1)
    delta = one
    for m2 in range(i + 1):
        for m1 in range(m2):
            delta = delta * _t_diff(ctx, m2, m1)
    weights = []
    for ell in range(i + 1):
        num, den = kappa_carlitz_nodes(ctx, i, j, ell, k)
        cof = one if (i - ell) % 2 == 0 else -one
        for m2 in range(i + 1):
            for m1 in range(m2):
                if ell not in (m1, m2):
                    cof = cof * _t_diff(ctx, m2, m1)
        weights.append(num * cof)
    return delta, tuple(weights)


def hyperderiv_via_vandermonde(a: PolyA, i: int, j: int, k: int = 0):
    """Evaluate sum_l kappa_{i j l}(t - theta^(q^k), ..., t^(q^i) - theta^(q^k)) a(t)^(q^l).

    Returns ``(value, certificate)``.  The sum is brought over the common
    denominator Delta(t); ``certificate`` is True iff the numerator equals
    c(theta) * Delta(t) exactly, in which case ``value`` is c, which should be
    the q^k-th power of the j-th hyperderivative of a.
    """
    if a.degree > i:
        raise UsageError(f"deg a = {a.degree} exceeds i = {i}")
    if not 0 <= j <= i:
        raise UsageError(f"need 0 <= j <= i, got j={j}, i={i}")
    if k < 0:
        raise UsageError("k must be >= 0")
    ctx = a.ctx
    delta, weights = _weighted_numerators(ctx, i, j, k)
    at = MultiPoly.from_polya(a, 't')
    total = MultiPoly.zero(Fq(ctx))
    for ell, w in enumerate(weights):
        # a(t)^(q^l) = a(t^(q^l)) because the coefficients lie in F_q
        total = total + w * at.frobenius(ell)
    top = delta.degree('t')
    lead = delta.coefficient(t=top)
    cand = total.coeff_of('t', top).scale(ctx.inv(lead))
    certificate = (total - cand * delta).is_zero()
    return _as_polya(cand), certificate

