"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import contextlib
import io
import itertools
import json
import random
import time

import pytest

from carlitz_lab import GF, A, ZZ, MultiPoly, PolyA
from carlitz_lab.carlitz import bracket_carlitz_formula, bracket_direct, bracket_hyper_formula, bracket_theta_power
from carlitz_lab.cli import main as cli_main
from carlitz_lab.hyperderiv import hyperderivative, voloch_qpower_check
from carlitz_lab.logalg import lambda_brute, lambda_closed_single, special_poly_thakur, verify_log_algebraicity
from carlitz_lab.powersums import (angles_pellarin_both_sides, h_brute, h_closed, power_sum_exponent, s_brute,
                                   s_closed, sigma_q)
from carlitz_lab.symfun import (ehdiff_complete, ehdiff_elementary, esym, g_poly, hsym, matmul, matrix_E, matrix_H,
                                symmrec2_sum)
from carlitz_lab.vandermonde import hyperderiv_via_vandermonde

from oracles import carlitz_on

TITLES = {
    1: "bracket agreement across four routes",
    2: "hyperderivative power sums, closed vs brute",
    3: "power sum vanishing and product formula",
    4: "multivariable power sums in t_1..t_s",
    5: "special polynomials, closed form vs series",
    6: "lambda closed form in both regimes",
    7: "symbolic symmetric-function identities over ZZ",
    8: "hyperderivatives from twists with certificate",
    9: "q-power identity for truncated series",
    10: "verify all is independent of --threads",
}


class Tally:
    """Counts cases and keeps the first failure."""

    def __init__(self):
        self.cases = 0
        self.failure = None

    def check(self, ok, label):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = label


def _monic(F, deg):
    for tail in itertools.product(range(F.q), repeat=deg):
        yield PolyA(F, list(tail) + [1])


def criterion_1(t):
    for q in (2, 3):
        F = GF(q)
        for deg in range(5):
            for a in _monic(F, deg):
                for k in range(deg + 2):
                    d = bracket_direct(a, k)
                    t.check(d == bracket_carlitz_formula(a, k) == bracket_hyper_formula(a, k),
                            f"q={q} a={a} k={k}")
        th = PolyA.theta(F)
        for m in range(1, 9):
            for k in range(m + 1):
                t.check(bracket_theta_power(F, m, k) == bracket_direct(th ** m, k), f"q={q} m={m} k={k}")


def criterion_2(t):
    F3 = GF(3)
    for i in (1, 2, 3):
        pairs = [(j, mu) for j in range(i + 1) for mu in range(i + 2)]
        for s in (1, 2):
            for combo in itertools.combinations_with_replacement(pairs, s):
                t.check(h_closed(F3, i, combo) == h_brute(F3, i, combo), f"q=3 i={i} pairs={combo}")
    F2 = GF(2)
    for i in (1, 2, 3):
        for j in range(i + 1):
            for mu in range(i + 2):
                t.check(h_closed(F2, i, ((j, mu),)) == h_brute(F2, i, ((j, mu),)), f"q=2 i={i} pair={(j, mu)}")


def criterion_3(t):
    for q in (2, 3):
        F = GF(q)
        for i in range(4):
            for k in range(41):
                if k < q ** i - 1 or sigma_q(k, q) < i * (q - 1):
                    t.check(s_brute(F, i, k).is_zero(), f"q={q} i={i} k={k}")
    F3 = GF(3)
    for i in range(4):
        for s in (1, 2):
            for ells in itertools.combinations_with_replacement(range(i + 3), s):
                t.check(s_closed(F3, i, ells) == s_brute(F3, i, power_sum_exponent(3, ells)),
                        f"q=3 i={i} ells={ells}")


def criterion_4(t):
    for q, i, s in ((3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2), (4, 2, 2), (5, 1, 3)):
        lhs, rhs = angles_pellarin_both_sides(GF(q), i, s)
        t.check(lhs == rhs, f"(q, i, s)={(q, i, s)}")


def _displayed_forms(F):
    q = F.q
    x, z = MultiPoly.gens(A(F), 'x', 'z')
    th = PolyA.theta(F)
    forms = {1: x * z, q: x ** q * z - x ** q * z ** q}
    if q > 2:
        forms[q + 1] = x ** (q + 1) * z - x ** (2 * q) * z ** q
        forms[2 * q] = (x ** (2 * q) * z - ((x ** (2 * q)).scale(th ** q - th) + x ** (q * q + q) * 2) * z ** q
                        + x ** (2 * q * q) * z ** (q * q))
    forms[q * q] = (carlitz_on(th ** 2, x) * z - carlitz_on(th ** q + th, carlitz_on(th, x) * z)
                    + carlitz_on(th ** (q + 1), x * z))
    return forms


def criterion_5(t):
    grid = {3: ((1, 2, 3, 4, 6, 9, 10, 12, 18, 27), 27), 2: ((1, 2, 4, 8), 16), 5: ((1, 2, 3, 4, 5, 6, 25, 30), 25)}
    for q, (ms, N) in grid.items():
        F = GF(q)
        for m in ms:
            rep = verify_log_algebraicity(F, m, N)
            t.check(rep.match and rep.integral, f"q={q} m={m} N={N}")
    for q in (3, 5):
        F = GF(q)
        for m, want in _displayed_forms(F).items():
            t.check(special_poly_thakur(F, m) == want, f"displayed P_{m} at q={q}")


def criterion_6(t):
    for q in (2, 3):
        F = GF(q)
        for i in range(4):
            for mu in range(4):
                t.check(lambda_closed_single(F, i, mu) == lambda_brute(F, i, q ** mu), f"q={q} i={i} mu={mu}")


def _xs(n, prefix='x'):
    return list(MultiPoly.gens(ZZ, *[f"{prefix}{m}" for m in range(1, n + 1)])) if n else []


def criterion_7(t):
    one = MultiPoly.const(ZZ, 1)
    zero = one * 0
    for d in range(1, 7):
        vals = _xs(max(d - 1, 1))
        prod = matmul(matrix_E(d, vals, one), matrix_H(d, vals, one))
        ident = [[one if r == c else zero for c in range(d)] for r in range(d)]
        t.check(prod == ident, f"E*H d={d}")
    for i in range(1, 6):
        vals = _xs(max(i - 1, 1))
        for k in range(1, i + 1):
            t.check(symmrec2_sum(i, k, vals, one) == (one if k == i else zero), f"telescoping i={i} k={k}")
    T = MultiPoly.var(ZZ, 'T')
    for d in range(1, 5):
        vals = _xs(d)
        shifted = [T - x for x in vals]
        for k in range(5):
            if k <= d:
                t.check(ehdiff_elementary(d, k, vals, T) == esym(shifted, d - k, one), f"shift e d={d} k={k}")
            t.check(ehdiff_complete(d, k, vals, T) == hsym(shifted, k, one), f"shift h d={d} k={k}")
    for i in range(2, 6):
        x = _xs(i - 1)
        for k in range(1, i):
            for ell in range(1, k + 1):
                y = _xs(ell, 'y')
                got = g_poly(i, k, ell, x, y, one)
                gone = {v for m in range(ell, k) for v in x[m].vars}
                reduced = g_poly(i - (k - ell), ell, ell, x[:ell] + x[k:], y, one)
                t.check(not gone & set(got.vars) and got == reduced, f"elimination i={i} k={k} l={ell}")


def criterion_8(t):
    for q in (2, 3):
        F = GF(q)
        for i in range(4):
            polys = [PolyA.zero(F)] + [PolyA(F, list(tail) + [lead]) for deg in range(i + 1)
                                       for lead in range(1, q) for tail in itertools.product(range(q), repeat=deg)]
            for a in polys:
                for j in range(i + 1):
                    for k in range(4):
                        got, cert = hyperderiv_via_vandermonde(a, i, j, k)
                        t.check(cert and got == hyperderivative(a, j).twist(k), f"q={q} a={a} i={i} j={j} k={k}")


def criterion_9(t):
    rng = random.Random(2024)
    for q in (2, 3, 4):
        F = GF(q)
        for n in range(20):
            g = PolyA(F, [rng.randrange(q) for _ in range(32)])
            for k in range(4):
                t.check(voloch_qpower_check(g, k, 32), f"q={q} series #{n} k={k}")


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != 'millis'}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def criterion_10(t):
    reports = []
    for threads in ('1', '8'):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(['verify', 'all', '--q', '3', '--seed', '7', '--threads', threads, '--format', 'json'])
        t.check(code == 0, f"exit code {code} with --threads {threads}")
        reports.append(_strip_timing(json.loads(buf.getvalue())))
    t.check(reports[0] == reports[1], "reports differ")


CRITERIA = {1: (criterion_1, 10), 2: (criterion_2, 60), 3: (criterion_3, None), 4: (criterion_4, 30),
            5: (criterion_5, 300), 6: (criterion_6, None), 7: (criterion_7, 20), 8: (criterion_8, None),
            9: (criterion_9, None), 10: (criterion_10, None)}


def run_criterion(n):
    fn, budget = CRITERIA[n]
    t = Tally()
    start = time.perf_counter()
    fn(t)
    elapsed = time.perf_counter() - start
    over = budget is not None and elapsed > budget
    ok = t.failure is None and not over
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {TITLES[n]}  ({t.cases} cases, {elapsed:.1f} s"
    line += f", budget {budget} s)" if budget else ")"
    if t.failure:
        line += f"  first failure: {t.failure}"
    elif over:
        line += "  over budget"
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = run_criterion(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == '__main__':
    for n in sorted(CRITERIA):
        print(run_criterion(n)[1], flush=True)
