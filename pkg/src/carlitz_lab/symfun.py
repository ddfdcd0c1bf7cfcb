"""Elementary and complete homogeneous symmetric polynomials and the identities
built from them.

Every function takes its arguments as a plain sequence of ring elements
(Python ints, FqElem, PolyA, RatFun or MultiPoly) and uses only ``+``, ``-``
and ``*``, so the same code serves symbolic verification over ZZ and
concrete evaluation over F_q or A.
"""

from __future__ import annotations

import math

from .errors import UsageError
from .hyperderiv import lucas_binomial


def _one_like(values, one):
    if one is not None:
        return one
    if values:
        return values[0] * 0 + 1
    return 1


def esym(values, j: int, one=None):
    """e_{i,j}(values): the coefficient of t^j in prod (1 + x_m t)."""
    values = list(values)
    one = _one_like(values, one)
    if j < 0 or j > len(values):
        return one * 0
    # coefficients of the running product, truncated to degree j
    row = [one] + [None] * j
    top = 0
    for x in values:
        top = min(top + 1, j)
        for d in range(top, 0, -1):
            prev = row[d - 1]
            term = prev * x
            row[d] = term if row[d] is None else row[d] + term
    return row[j]


def hsym(values, j: int, one=None):
    """h_{i,j}(values): the sum of all degree-j monomials."""
    values = list(values)
    one = _one_like(values, one)
    if j < 0:
        return one * 0
    if j == 0:
        return one
    if not values:
        return one * 0
    # h_{m,d} = h_{m-1,d} + x_m h_{m,d-1}
    row = [one] + [one * 0] * j
    for x in values:
        for d in range(1, j + 1):
            row[d] = row[d] + x * row[d - 1]
    return row[j]


def _binom(n, k, p):
    if p:
        return lucas_binomial(n, k, p)
    return math.comb(n, k) if 0 <= k <= n else 0


def _char_of(x):
    ctx = getattr(x, 'ctx', None)
    if ctx is None:
        ring = getattr(x, 'ring', None)
        ctx = getattr(ring, 'ctx', None)
    return ctx.p if ctx is not None else 0


# --- matrices ----------------------------------------------------------------

def matrix_E(d: int, values, one=None):
    """d x d lower-triangular matrix with entry (r, c) = (-1)^(r-c) e_{r, r-c}(x_1..x_r)."""
    if d < 1:
        raise UsageError("d must be >= 1")
    values = list(values)
    if len(values) < d - 1:
        raise UsageError(f"need {d - 1} values, got {len(values)}")
    one = _one_like(values, one)
    zero = one * 0
    M = [[zero] * d for _ in range(d)]
    for r in range(d):
        for c in range(r + 1):
            v = esym(values[:r], r - c, one)
            M[r][c] = v if (r - c) % 2 == 0 else -v
    return M


def matrix_H(d: int, values, one=None):
    """d x d lower-triangular matrix with entry (r, c) = h_{c+1, r-c}(x_1..x_{c+1}), diagonal 1."""
    if d < 1:
        raise UsageError("d must be >= 1")
    values = list(values)
    if len(values) < d - 1:
        raise UsageError(f"need {d - 1} values, got {len(values)}")
    one = _one_like(values, one)
    zero = one * 0
    M = [[zero] * d for _ in range(d)]
    for r in range(d):
        M[r][r] = one
        for c in range(r):
            M[r][c] = hsym(values[:c + 1], r - c, one)
    return M


def matrix_N(d: int, values, one=None):
    """(d+1) x (d+1) block matrix diag(1, E_d)."""
    one = _one_like(values, one)
    zero = one * 0
    E = matrix_E(d, values, one)
    N = [[zero] * (d + 1) for _ in range(d + 1)]
    N[0][0] = one
    for r in range(d):
        for c in range(d):
            N[r + 1][c + 1] = E[r][c]
    return N


def matmul(X, Y):
    n, m, k = len(X), len(Y), len(Y[0])
    out = []
    for r in range(n):
        row = []
        for c in range(k):
            acc = X[r][0] * Y[0][c]
            for s in range(1, m):
                acc = acc + X[r][s] * Y[s][c]
            row.append(acc)
        out.append(row)
    return out


# --- identities ----------------------------------------------------------------

def symmrec2_sum(i: int, k: int, values, one=None):
    """sum_{j=k}^{i} (-1)^(i-j) e_{i-1,i-j}(x_1..x_{i-1}) h_{k,j-k}(x_1..x_k); 1 if k == i else 0."""
    if not 1 <= k <= i:
        raise UsageError(f"need 1 <= k <= i, got i={i}, k={k}")
    values = list(values)
    if len(values) < i - 1:
        raise UsageError(f"need {i - 1} values, got {len(values)}")
    one = _one_like(values, one)
    xs = values[:i - 1]
    total = one * 0
    for j in range(k, i + 1):
        term = esym(xs, i - j, one) * hsym(values[:k], j - k, one)
        total = total + term if (i - j) % 2 == 0 else total - term
    return total


def ehdiff_elementary(d: int, k: int, values, T, one=None):
    """sum_{j=k}^{d} (-1)^(d-j) C(j,k) e_{d,d-j}(x) T^(j-k), which equals e_{d,d-k}(T - x_1, ..., T - x_d)."""
    if not 0 <= k <= d:
        raise UsageError(f"need 0 <= k <= d, got d={d}, k={k}")
    values = list(values)[:d]
    one = _one_like(values, one)
    p = _char_of(T) or (values and _char_of(values[0])) or 0
    total = one * 0
    Tpow = one
    for j in range(k, d + 1):
        b = _binom(j, k, p)
        if b:
            term = esym(values, d - j, one) * Tpow * b
            total = total + term if (d - j) % 2 == 0 else total - term
        Tpow = Tpow * T
    return total


def ehdiff_complete(d: int, k: int, values, T, one=None):
    """sum_{j=0}^{k} (-1)^j C(d+k-1, k-j) h_{d,j}(x) T^(k-j), which equals h_{d,k}(T - x_1, ..., T - x_d)."""
    if k < 0:
        raise UsageError("k must be >= 0")
    values = list(values)[:d]
    one = _one_like(values, one)
    p = _char_of(T) or (values and _char_of(values[0])) or 0
    total = one * 0
    for j in range(k + 1):
        b = _binom(d + k - 1, k - j, p)
        if b:
            term = hsym(values, j, one) * (T ** (k - j) if k - j else one) * b
            total = total + term if j % 2 == 0 else total - term
    return total


def g_poly(i: int, k: int, ell: int, xs, ys, one=None):
    """G_{i,k,l}: the sum of (-1)^(i-j) e_{i-1,i-j}(y_1..y_l, x_{l+1}..x_{i-1}) h_{k,j-k}(x_1..x_k) over k <= j <= i."""
    if not 1 <= ell <= k <= i - 1:
        raise UsageError(f"need 1 <= l <= k <= i-1, got i={i}, k={k}, l={ell}")
    xs, ys = list(xs), list(ys)
    if len(xs) < i - 1 or len(ys) < ell:
        raise UsageError(f"need {i - 1} x-values and {ell} y-values")
    one = _one_like(xs, one)
    mixed = ys[:ell] + xs[ell:i - 1]
    total = one * 0
    for j in range(k, i + 1):
        term = esym(mixed, i - j, one) * hsym(xs[:k], j - k, one)
        total = total + term if (i - j) % 2 == 0 else total - term
    return total
