"""
The Carlitz module and its coefficients
=======================================

C_a is the twisted polynomial obtained from a(t) by substituting C_t = t + tau.
Its coefficients <a>_k can be read off four ways; this script prints them side
by side for a few small polynomials.
"""

from carlitz_lab import GF, PolyA
from carlitz_lab.carlitz import (bracket_carlitz_formula, bracket_hyper_formula, carlitz_of, carlitz_poly,
                                 mu_expand)

F = GF(3)
th = PolyA.theta(F)

# --- C_a as a twisted polynomial and as an additive polynomial in x
for a in (th, th ** 2, th ** 3 + th + 1):
    print(f"C_{{{a}}} = {carlitz_of(a)}")
    print(f"        = {carlitz_poly(a)}")

# --- four routes to the same coefficient
a = th ** 4 + th * 2 + 1
mu = mu_expand(a)
print(f"\na = {a}")
print(f"{'k':>2}  {'direct':<40} {'all agree'}")
for k in range(a.degree + 1):
    direct = carlitz_of(a).coefficient(k)
    others = (bracket_carlitz_formula(a, k), bracket_hyper_formula(a, k), mu[k])
    print(f"{k:>2}  {str(direct):<40} {all(v == direct for v in others)}")

# --- the top coefficient is always the leading coefficient of a
print(f"\n<a>_deg = {carlitz_of(a).coefficient(a.degree)}")
