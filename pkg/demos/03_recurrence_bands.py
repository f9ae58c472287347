"""Extract higher-order recurrences: Q(x) q_n = sum_j gamma_{n,j} q_{n+j}.

Multiplication by a generic polynomial spreads q_n over every lower index.
For special Q the expansion collapses to a symmetric band around n, which is
the higher-order analogue of the classical three-term relation.  For Q = x a
single witness degree already rules any band out.
"""

from fractions import Fraction as F

from casolag import (FamilySpec, Poly, obstruction_test, parse_poly, rat_str,
                     recurrence_table, verify_band)

spec = FamilySpec(F(7), (1, 2, 5), {
    1: parse_poly("x-1"),
    2: parse_poly("x^2+1"),
    5: parse_poly("x^5+x^4+x^3+1"),
})

Q = parse_poly("x^4+16*x^3")
table = recurrence_table(spec, Q, 12)
print("Q =", "x^4+16*x^3")
print("band [-4, 4] with nonzero extremes:", verify_band(table, 4))
print("band [-3, 3]:", verify_band(table, 3))
print()
print("coefficients for n = 6 (j = -4..4):")
for j in range(-4, 5):
    print(f"  gamma_(6,{j:+d}) = {rat_str(table.gamma(6, j))}")
print()

quintic = parse_poly("x^5-15*x^3")
t5 = recurrence_table(spec, quintic, 12)
print("Q = x^5-15*x^3, band [-5, 5]:", verify_band(t5, 5))
print()

# Q = x cannot work for these degrees: 1 - 1 = 0 falls outside G, and the
# expansion of x q_n keeps nonzero coefficients arbitrarily far down.
res = obstruction_test(spec, Poly.x(), n_check=12)
print("Q = x obstructed:", res.obstructed, "- witness degree", res.witness)
print("all bands s <=", res.bands_refuted_up_to, "refuted on the table")
