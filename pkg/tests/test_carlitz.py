import itertools
import random

import pytest
from hypothesis import given

from carlitz_lab import A, GF, K, Fq, MultiPoly, PolyA, TruncSeries, UsageError
from carlitz_lab.carlitz import (TwistedPoly, bracket_carlitz_formula, bracket_direct, bracket_hyper_formula,
                                 bracket_theta_power, carlitz_eval, carlitz_of, carlitz_poly, exp_c, log_c,
                                 mu_basis, mu_expand)
from carlitz_lab.poly import RatFun, carlitz_factorial

from conftest import field_and_polys
from oracles import carlitz_brackets_oracle, power_by_repetition


def P(ctx, *coeffs):
    return PolyA(ctx, list(coeffs))


def test_carlitz_of_examples():
    F3 = GF(3)
    th = PolyA.theta(F3)
    C = carlitz_of(th)
    assert C.coeffs == (th, PolyA.one(F3))
    assert str(C) == "θ + τ"
    assert carlitz_of(th ** 2).coeffs == (th ** 2, th + th ** 3, PolyA.one(F3))
    c = PolyA.const(F3, 2)
    assert carlitz_of(c).coeffs == (c,)
    assert carlitz_of(PolyA.zero(F3)).coeffs == ()


def test_twisted_multiplication_rule():
    F = GF(5)
    th = PolyA.theta(F)
    tau = TwistedPoly.tau(F)
    assert tau * th == TwistedPoly(F, [PolyA.zero(F), power_by_repetition(th, 5)])
    lhs = TwistedPoly(F, [PolyA.zero(F), th]) * TwistedPoly(F, [PolyA.zero(F), PolyA.zero(F), th + 1])
    assert lhs == TwistedPoly(F, [PolyA.zero(F)] * 3 + [th * (th + 1).twist(1)])


def test_direct_bracket_examples():
    F3 = GF(3)
    th = PolyA.theta(F3)
    a = th ** 2
    assert bracket_direct(a, 1) == th + th ** 3
    assert bracket_direct(a, 0) == a
    assert bracket_direct(a, 5) == PolyA.zero(F3)


def test_carlitz_formula_examples():
    F2, F3 = GF(2), GF(3)
    assert bracket_carlitz_formula(PolyA.theta(F2), 1) == PolyA.one(F2)
    a = P(F3, 1, 2, 0, 1)
    assert bracket_carlitz_formula(a, 0) == a
    assert bracket_carlitz_formula(PolyA.theta(F3) ** 2, 2) == PolyA.one(F3)
    assert bracket_carlitz_formula(a, 7) == PolyA.zero(F3)


def test_hyper_formula_examples():
    F3 = GF(3)
    th = PolyA.theta(F3)
    a = P(F3, 2, 0, 1, 1)
    assert bracket_hyper_formula(a, 0) == a
    assert bracket_hyper_formula(th ** 2, 1) == th ** 3 + th
    rng = random.Random(3)
    for q in (2, 3, 4, 5):
        F = GF(q)
        for _ in range(50):
            deg = rng.randint(0, 5)
            b = PolyA(F, [rng.randrange(q) for _ in range(deg)] + [rng.randrange(1, q)])
            assert bracket_hyper_formula(b, deg) == PolyA.const(F, b.leading)


def test_theta_power_examples():
    F2, F3 = GF(2), GF(3)
    th = PolyA.theta(F3)
    assert bracket_theta_power(F3, 2, 1) == th + th ** 3
    assert bracket_theta_power(F3, 4, 4) == PolyA.one(F3)
    t2 = PolyA.theta(F2)
    assert bracket_theta_power(F2, 3, 1) == t2 ** 2 + t2 ** 3 + t2 ** 4 == bracket_direct(t2 ** 3, 1)
    with pytest.raises(UsageError):
        bracket_theta_power(F3, 1, 2)


def test_mu_examples():
    F2 = GF(2)
    R = Fq(F2)
    th, t = MultiPoly.gens(R, 'θ', 't')
    assert mu_basis(F2, 0) == MultiPoly.const(R, 1)
    assert mu_basis(F2, 2) == t ** 2 + (th + th ** 2) * t + th ** 3
    assert mu_expand(PolyA.theta(F2)) == [PolyA.theta(F2), PolyA.one(F2)]
    c = PolyA.const(GF(5), 3)
    assert mu_expand(c) == [c]


@pytest.mark.parametrize("q", [2, 3])
def test_mu_expansion_rebuilds_a_of_t(q):
    F = GF(q)
    R = Fq(F)
    for deg in range(6 if q == 2 else 5):
        for tail in itertools.product(range(q), repeat=deg):
            a = PolyA(F, list(tail) + [1])
            coeffs = mu_expand(a)
            rebuilt = MultiPoly.zero(R)
            for k, c in enumerate(coeffs):
                rebuilt = rebuilt + MultiPoly.from_polya(c) * mu_basis(F, k)
            assert rebuilt == MultiPoly.from_polya(a, 't')


def test_exp_and_log_examples():
    F3 = GF(3)
    Kr = K(F3)
    z = MultiPoly.var(Kr, 'z')
    q = 3
    e = exp_c(TruncSeries.from_multipoly(z, q ** 2))
    d1 = RatFun(PolyA.one(F3), carlitz_factorial(F3, 1))
    assert e.to_multipoly() == z + (z ** q).scale(d1)
    assert log_c(exp_c(TruncSeries.from_multipoly(z, q ** 3))).to_multipoly() == z
    with pytest.raises(UsageError):
        exp_c(TruncSeries.from_multipoly(z + 1, 9))


def test_carlitz_eval_example():
    F3 = GF(3)
    R = A(F3)
    x = MultiPoly.var(R, 'x')
    th = PolyA.theta(F3)
    assert carlitz_eval(th, x) == x.scale(th) + x ** 3
    assert carlitz_poly(th) == x.scale(th) + x ** 3
    assert str(carlitz_poly(th ** 2)) == "x^9 + (θ^3 + θ)*x^3 + θ^2*x"


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_ring_homomorphism(q):
    F = GF(q)
    rng = random.Random(q)
    for _ in range(100):
        a = PolyA(F, [rng.randrange(q) for _ in range(rng.randint(0, 4))])
        b = PolyA(F, [rng.randrange(q) for _ in range(rng.randint(0, 4))])
        assert carlitz_of(a + b) == carlitz_of(a) + carlitz_of(b)
        assert carlitz_of(a * b) == carlitz_of(a) * carlitz_of(b)


@given(field_and_polys(n=1, max_deg=3, sizes=(2, 3, 4)))
def test_brackets_match_iterated_c_theta(args):
    F, a = args
    want = carlitz_brackets_oracle(a)
    for k in range(max(a.degree, 0) + 2):
        expected = want.get(k, PolyA.zero(F))
        assert bracket_direct(a, k) == expected
        assert bracket_carlitz_formula(a, k) == expected
        assert bracket_hyper_formula(a, k) == expected


@pytest.mark.parametrize("a_coeffs", [(0, 1), (1, 0, 1), (0, 1, 0, 1)])
@pytest.mark.parametrize("q", [2, 3])
def test_exp_log_inverse_and_functional_equation(q, a_coeffs):
    F = GF(q)
    a = PolyA(F, list(a_coeffs))
    N = q ** 3
    Kr = K(F)
    z = MultiPoly.var(Kr, 'z')
    x = MultiPoly.var(Kr, 'x')
    for f in (z, z * x + z ** 2):
        s = TruncSeries.from_multipoly(f, N)
        assert exp_c(log_c(s)) == s
        assert log_c(exp_c(s)) == s
    ez = exp_c(TruncSeries.from_multipoly(z, N))
    lhs = exp_c(TruncSeries.from_multipoly(z.scale(RatFun.from_poly(a)), N))
    assert lhs == carlitz_eval(a, ez)
