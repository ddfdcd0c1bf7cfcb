import random

import pytest
from hypothesis import given, strategies as st

from carlitz_lab import GF, ZZ, Fq, MultiPoly, PolyA, UsageError
from carlitz_lab.symfun import (ehdiff_complete, ehdiff_elementary, esym, g_poly, hsym, matmul, matrix_E,
                                matrix_H, matrix_N, symmrec2_sum)

from oracles import esym_by_subsets, hsym_by_multisets


def xs(n, prefix='x'):
    return list(MultiPoly.gens(ZZ, *[f"{prefix}{m}" for m in range(1, n + 1)]))


ONE = MultiPoly.const(ZZ, 1)


def identity(d, one, zero):
    return [[one if r == c else zero for c in range(d)] for r in range(d)]


def test_esym_examples():
    x1, x2 = xs(2)
    assert esym([x1, x2], 1) == x1 + x2
    assert esym([x1, x2], -1).is_zero()
    assert esym([x1, x2], 3).is_zero()
    F5 = GF(5)
    vals = [F5.elem(1), F5.elem(2), F5.elem(3)]
    assert esym(vals, 3) == F5.elem(1)


def test_hsym_examples():
    x1, x2 = xs(2)
    assert hsym([x1, x2], 2) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert hsym([], 0, ONE) == ONE
    assert hsym([], 2, ONE).is_zero()
    assert hsym([x1], -1).is_zero()
    F3 = GF(3)
    th = PolyA.theta(F3)
    assert hsym([th, th ** 3], 1) == th + th ** 3


def test_matrix_examples():
    x1, = xs(1)
    zero = ONE * 0
    assert matrix_E(2, [x1]) == [[ONE, zero], [-x1, ONE]]
    assert matrix_H(2, [x1]) == [[ONE, zero], [x1, ONE]]
    assert matmul(matrix_E(2, [x1]), matrix_H(2, [x1])) == identity(2, ONE, zero)
    assert matrix_E(1, [], ONE) == [[ONE]] == matrix_H(1, [], ONE)
    F7 = GF(7)
    vals = [F7.elem(v) for v in (1, 2, 3)]
    prod = matmul(matrix_E(4, vals), matrix_H(4, vals))
    assert prod == identity(4, F7.elem(1), F7.elem(0))
    N = matrix_N(2, [x1])
    assert N == [[ONE, zero, zero], [zero, ONE, zero], [zero, -x1, ONE]]
    with pytest.raises(UsageError):
        matrix_E(0, [])


@pytest.mark.parametrize("d", range(1, 7))
def test_e_times_h_is_identity_symbolically(d):
    vals = xs(max(d - 1, 1))
    prod = matmul(matrix_E(d, vals, ONE), matrix_H(d, vals, ONE))
    assert prod == identity(d, ONE, ONE * 0)


@pytest.mark.parametrize("n", range(0, 6))
def test_symmetric_functions_match_subset_enumeration(n):
    vals = xs(n)
    for j in range(-1, n + 3):
        assert esym(vals, j, ONE) == esym_by_subsets(vals, j, ONE)
        assert hsym(vals, j, ONE) == hsym_by_multisets(vals, j, ONE)


@pytest.mark.parametrize("p", [5, 101])
def test_generating_function(p):
    F = GF(p)
    R = Fq(F)
    T = MultiPoly.var(R, 'T')
    rng = random.Random(p)
    for n in range(1, 7):
        vals = [rng.randrange(p) for _ in range(n)]
        prod = MultiPoly.const(R, 1)
        for v in vals:
            prod = prod * (T * v + 1)
        for j in range(n + 2):
            want = prod.coeff_of('T', j).constant_value() if prod.coeff_of('T', j).terms else 0
            assert esym([F.elem(v) for v in vals], j) == want


@pytest.mark.parametrize("i", range(1, 6))
def test_recurrences_symbolic(i):
    vals = xs(i)
    for j in range(-1, i + 3):
        # e_{i,j} = e_{i-1,j} + x_i e_{i-1,j-1};  h_{i,j} = h_{i-1,j} + x_i h_{i,j-1}
        assert esym(vals, j, ONE) == esym(vals[:-1], j, ONE) + vals[-1] * esym(vals[:-1], j - 1, ONE)
        assert hsym(vals, j, ONE) == hsym(vals[:-1], j, ONE) + vals[-1] * hsym(vals, j - 1, ONE)


@pytest.mark.parametrize("i", range(1, 6))
def test_specialization_at_zero(i):
    vals = xs(i)
    zeroed = vals[:-1] + [ONE * 0]
    for j in range(0, i + 3):
        assert esym(zeroed, j, ONE) == esym(vals[:-1], j, ONE)
        assert hsym(zeroed, j, ONE) == hsym(vals[:-1], j, ONE)


def test_symmrec2_examples():
    x1, = xs(1)
    assert symmrec2_sum(2, 1, [x1]).is_zero()
    assert symmrec2_sum(3, 3, xs(2)) == ONE
    F5 = GF(5)
    rng = random.Random(5)
    vals = [F5.elem(rng.randrange(5)) for _ in range(3)]
    assert symmrec2_sum(4, 2, vals) == F5.elem(0)
    with pytest.raises(UsageError):
        symmrec2_sum(3, 4, xs(2))


@pytest.mark.parametrize("i", range(1, 6))
def test_symmrec2_symbolic(i):
    vals = xs(max(i - 1, 1))
    for k in range(1, i + 1):
        got = symmrec2_sum(i, k, vals, ONE)
        assert got == (ONE if k == i else ONE * 0)


def test_ehdiff_examples():
    x1, x2 = xs(2)
    T = MultiPoly.var(ZZ, 'T')
    assert ehdiff_elementary(1, 0, [x1], T) == T - x1
    assert ehdiff_complete(2, 1, [x1, x2], T) == T * 2 - x1 - x2
    assert ehdiff_elementary(2, 2, [x1, x2], T) == ONE


@pytest.mark.parametrize("d", range(1, 5))
def test_ehdiff_symbolic(d):
    vals = xs(d)
    T = MultiPoly.var(ZZ, 'T')
    shifted = [T - x for x in vals]
    for k in range(0, d + 1):
        assert ehdiff_elementary(d, k, vals, T) == esym(shifted, d - k, ONE)
    for k in range(0, 5):
        assert ehdiff_complete(d, k, vals, T) == hsym(shifted, k, ONE)


@pytest.mark.parametrize("p", [2, 3])
def test_ehdiff_in_positive_characteristic(p):
    F = GF(p)
    rng = random.Random(p)
    for _ in range(50):
        d = rng.randint(1, 4)
        vals = [F.elem(rng.randrange(p)) for _ in range(d)]
        T = F.elem(rng.randrange(p))
        shifted = [T - x for x in vals]
        for k in range(d + 1):
            assert ehdiff_elementary(d, k, vals, T) == esym(shifted, d - k)
        for k in range(5):
            assert ehdiff_complete(d, k, vals, T) == hsym(shifted, k)


def test_g_poly_examples():
    x1, = xs(1)
    y1, = xs(1, 'y')
    assert g_poly(2, 1, 1, [x1], [y1]) == x1 - y1
    x = xs(2)
    y = xs(1, 'y')
    a = g_poly(3, 2, 1, x, y)
    assert x[1].vars[0] not in a.vars
    with pytest.raises(UsageError):
        g_poly(3, 3, 1, x, y)


@pytest.mark.parametrize("i", range(2, 6))
def test_variable_elimination(i):
    x = xs(i - 1)
    for k in range(1, i):
        for ell in range(1, k + 1):
            y = xs(ell, 'y')
            got = g_poly(i, k, ell, x, y, ONE)
            eliminated = {v for m in range(ell, k) for v in x[m].vars}
            assert not eliminated & set(got.vars)
            reduced = g_poly(i - (k - ell), ell, ell, x[:ell] + x[k:], y, ONE)
            assert got == reduced


@given(st.integers(2, 5), st.data())
def test_variable_elimination_at_random_points(i, data):
    F = GF(101)
    k = data.draw(st.integers(1, i - 1))
    ell = data.draw(st.integers(1, k))
    point = [F.elem(data.draw(st.integers(0, 100))) for _ in range(i - 1)]
    other = list(point)
    for m in range(ell, k):
        other[m] = F.elem(data.draw(st.integers(0, 100)))
    y = [F.elem(data.draw(st.integers(0, 100))) for _ in range(ell)]
    assert g_poly(i, k, ell, point, y) == g_poly(i, k, ell, other, y)
