"""
Special polynomials from the Carlitz exponential
================================================

exp_C applied to sum_i lambda_i(m) z^(q^i), lambda_i(m) = sum C_a(x)^m / a over
monic a of degree i, is a polynomial P_m(x, z) with coefficients in F_q[theta].
When the base-q digits of m sum to at most q - 1 there is a closed form.
"""

from carlitz_lab import GF
from carlitz_lab.logalg import lambda_brute, lambda_closed_single, special_poly_series, verify_log_algebraicity

F = GF(3)

# --- lambda_i(q^mu) closed form against the brute sum
for i, mu in ((1, 1), (2, 1), (1, 3)):
    print(f"lambda_{i}(3^{mu}) closed = brute: {lambda_closed_single(F, i, mu) == lambda_brute(F, i, 3 ** mu)}")

# --- closed form against the truncated series
print()
for m in (1, 3, 4, 6, 9):
    rep = verify_log_algebraicity(F, m, 27)
    print(f"P_{m} = {rep.poly}")
    print(f"      match mod z^27: {rep.match}, integral: {rep.integral}, {rep.millis:.0f} ms")

# --- digit sum 3 > q - 1: no closed form, but the series still truncates to a polynomial
print()
print("P_5 mod z^10 =", special_poly_series(F, 5, 10).to_multipoly())
