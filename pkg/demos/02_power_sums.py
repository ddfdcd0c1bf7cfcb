"""
Power sums over monic polynomials
=================================

S_i(k) sums a^k over the q^i monic polynomials of degree i. Most of them vanish;
the ones with k = q^l_1 + ... + q^l_s - 1 have a product formula, and attaching
hyperderivatives gives a second family with closed forms.
"""

from carlitz_lab import GF
from carlitz_lab.powersums import h_brute, h_closed, s_brute, s_closed, sivanish_predicate

F = GF(3)

# --- which S_1(k), S_2(k) are forced to vanish, and which really do
for i in (1, 2):
    forced = [k for k in range(30) if sivanish_predicate(3, i, k)]
    actual = [k for k in range(30) if s_brute(F, i, k).is_zero()]
    print(f"i={i}: forced zero for {len(forced)} k < 30, zero for {len(actual)}; "
          f"first nonzero k = {min(set(range(30)) - set(actual))}")

# --- product formula against brute force
for ells in ((2,), (2, 3), (1, 4)):
    k = sum(3 ** ell for ell in ells) - 1
    print(f"S_2({k}) = {s_closed(F, 2, ells)}   matches brute force: {s_closed(F, 2, ells) == s_brute(F, 2, k)}")

# --- hyperderivative power sums: sum over a of d^j(a)^(q^mu) / a
print()
for pairs in (((1, 0),), ((1, 2), (2, 0)), ((2, 3),)):
    closed, brute = h_closed(F, 2, pairs), h_brute(F, 2, pairs)
    print(f"H_2{list(pairs)} = {closed}   matches brute force: {closed == brute}")
