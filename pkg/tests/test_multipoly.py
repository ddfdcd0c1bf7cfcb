import json

import pytest
from hypothesis import given, strategies as st

from carlitz_lab import A, GF, K, ZZ, Fq, MultiPoly, ParseError, PolyA, RatFun, TruncSeries, UsageError
from carlitz_lab.carlitz import carlitz_of
from carlitz_lab.parse import parse_int_list, parse_pairs, parse_poly
from carlitz_lab.serialize import (field_from_json, multipoly_from_json, poly_from_json, ratfun_from_json,
                                   to_json)


def test_substitution_examples():
    F = GF(3)
    R = Fq(F)
    th, t = MultiPoly.gens(R, 'θ', 't')
    assert (t - th).subs('t', th).is_zero()
    with pytest.raises(UsageError):
        (t - th).subs('w', th)


def test_coefficient_extraction_example():
    F = GF(3)
    R = Fq(F)
    x, z = MultiPoly.gens(R, 'x', 'z')
    f = x ** 3 * z - x ** 3 * z ** 3
    assert f.coefficient(x=3, z=3) == F.neg(1)
    assert f.coefficient({'x': 3, 'z': 1}) == 1
    assert f.coefficient(x=5) == 0


def test_series_truncation_example():
    R = K(GF(3))
    z = MultiPoly.var(R, 'z')
    one_plus_z = TruncSeries.from_multipoly(z + 1, 1)
    assert one_plus_z.to_multipoly() == MultiPoly.const(R, 1)
    with pytest.raises(UsageError):
        TruncSeries.from_multipoly(z, 2) + TruncSeries.from_multipoly(z, 3)


def test_variable_order_and_rendering():
    F = GF(3)
    R = A(F)
    x, z = MultiPoly.gens(R, 'x', 'z')
    theta = PolyA.theta(F)
    f = z * x ** 9 + x ** 3 * z * (theta ** 3 + theta) + x * z * theta ** 2
    assert f.vars == ('x', 'z')
    assert str(f) == "x^9*z + (θ^3 + θ)*x^3*z + θ^2*x*z"
    T, x1, x2 = MultiPoly.gens(ZZ, 'T', 'x1', 'x2')
    assert str(T * 2 - x1 - x2) == "2*T - x1 - x2"


def test_zero_terms_are_never_stored():
    R = Fq(GF(3))
    x = MultiPoly.var(R, 'x')
    f = x * 3
    assert f.is_zero() and f.terms == {}
    assert (x - x).vars == ()


def _random_multipoly(draw, R, F, names=('θ', 't', 'x')):
    n = draw(st.integers(0, 5))
    items = []
    for _ in range(n):
        mono = {v: draw(st.integers(0, 3)) for v in names}
        items.append((mono, draw(st.integers(0, F.q - 1))))
    return MultiPoly.from_terms(R, items)


@given(st.sampled_from([2, 3, 4, 5, 7]), st.data())
def test_evaluation_homomorphism(q, data):
    F = GF(q)
    R = Fq(F)
    f = _random_multipoly(data.draw, R, F)
    g = _random_multipoly(data.draw, R, F)
    point = {v: data.draw(st.integers(0, q - 1)) for v in ('θ', 't', 'x')}

    def ev(h):
        return h.substitute(point).constant_value() if h.terms else 0

    assert ev(f * g) == F.mul(ev(f), ev(g))
    assert ev(f + g) == F.add(ev(f), ev(g))


@given(st.sampled_from([2, 3]), st.integers(1, 12), st.data())
def test_series_product_depends_only_on_truncations(q, N, data):
    F = GF(q)
    R = K(F)
    z = MultiPoly.var(R, 'z')
    x = MultiPoly.var(R, 'x')

    def rand_series():
        f = MultiPoly.zero(R)
        for n in range(N + 4):
            f = f + z ** n * x ** data.draw(st.integers(0, 3)) * data.draw(st.integers(0, q - 1))
        return f

    f, g = rand_series(), rand_series()
    full = TruncSeries.from_multipoly(f * g, N)
    trunc = TruncSeries.from_multipoly(f, N) * TruncSeries.from_multipoly(g, N)
    assert full == trunc
    assert all(n < N for n in trunc.coeffs)


# --- serialization ---------------------------------------------------------------

def test_json_shapes():
    F3, F4 = GF(3), GF(4)
    assert to_json(F3) == {"p": 3, "e": 1}
    assert to_json(F4) == {"p": 2, "e": 2, "modulus": [1, 1, 1]}
    assert to_json(F4.elem([1, 1])) == [1, 1]
    assert to_json(PolyA.zero(F3)) == []
    assert to_json(PolyA(F3, [1, 2])) == [[1], [2]]
    r = RatFun(PolyA.one(F3), PolyA(F3, [0, 1]))
    assert to_json(r) == {"num": [[1]], "den": [[0], [1]]}
    x, z = MultiPoly.gens(Fq(F3), 'x', 'z')
    assert to_json(x * z) == [{"exps": {"x": 1, "z": 1}, "coeff": [1]}]
    assert to_json(carlitz_of(PolyA.theta(F3))) == [[[0], [1]], [[1]]]


@pytest.mark.parametrize("q", [3, 4, 9])
def test_json_round_trip(q):
    F = GF(q)
    assert field_from_json(json.loads(json.dumps(to_json(F)))) == F
    f = PolyA(F, [1, 0, q - 1, 2 % q])
    assert poly_from_json(F, to_json(f)) == f
    r = RatFun(f, PolyA(F, [1, 1]))
    assert ratfun_from_json(F, to_json(r)) == r
    x, z = MultiPoly.gens(K(F), 'x', 'z')
    m = x ** 3 * z * r + z
    assert multipoly_from_json(F, 'K', json.loads(json.dumps(to_json(m)))) == m
    a = MultiPoly.from_polya(f, 'θ', A(F)) * MultiPoly.var(A(F), 'x')
    assert multipoly_from_json(F, 'A', to_json(a)) == a
    with pytest.raises(UsageError):
        multipoly_from_json(F, 'Q', [])


# --- the literal parser ------------------------------------------------------------

def test_parser_basics():
    F3 = GF(3)
    t = PolyA.theta(F3)
    assert parse_poly(F3, "t^2") == t ** 2
    assert parse_poly(F3, "θ**3 + 2t + 4") == t ** 3 + t * 2 + 1
    assert parse_poly(F3, "(t+1)(t+2)") == t ** 2 + 2
    assert parse_poly(F3, "-t") == t * 2
    F4 = GF(4)
    u = F4.gen()
    assert parse_poly(F4, "(u+1)*t^2 + u") == PolyA(F4, [u, 0, F4.add(u, 1)])


@pytest.mark.parametrize("text,column", [("t+*2", 3), ("t^", 3), ("(t+1", 5), ("t $ 1", 3), ("", 1),
                                         ("t^t", 3)])
def test_parser_errors_report_columns(text, column):
    with pytest.raises(ParseError) as info:
        parse_poly(GF(3), text)
    assert info.value.column == column


def test_parser_rejects_u_in_prime_fields():
    with pytest.raises(ParseError):
        parse_poly(GF(5), "u*t")


def test_list_parsers():
    assert parse_pairs("1:0, 2:1") == ((1, 0), (2, 1))
    assert parse_int_list("0,1,1") == (0, 1, 1)
    with pytest.raises(ParseError):
        parse_pairs("1-0")
    with pytest.raises(ParseError):
        parse_int_list("1,x")
