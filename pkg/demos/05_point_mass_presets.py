"""Preset families attached to point-mass perturbations of the weight.

For integer alpha >= m the preset seeds reproduce the classical families that
are orthogonal for the Laguerre weight plus m derivative masses at the
origin; these satisfy an honest three-term recurrence.  For alpha < m the
construction still runs, but every member beyond n = m-alpha-1 vanishes at 0
to order m-alpha, which kills one down-coefficient exactly and makes a strict
three-term relation impossible.  Dividing out the common root recovers a
long-parameter family with the two parameters swapped.
"""

from casolag import (degenerate_preset, krall_preset, q_poly, rat_str,
                     render, three_term_test)

krall = krall_preset(2, 2, [1, 1])
print("long preset, seeds:")
for g in krall.G:
    print(f"  R_{g} =", render(krall.R[g]))
res = three_term_test(krall, 12)
print("strict three-term up to n = 12:", res.passed)
print("  a_n, n = 0..5:", " ".join(rat_str(v) for v in res.a[:6]))
print("  c_n, n = 1..5:", " ".join(rat_str(v) for v in res.c[1:6]))
print()

deg = degenerate_preset(1, 2, [0, 2])
print("short preset (alpha = 1 < m = 2), seeds:")
for g in deg.G:
    print(f"  R_{g} =", render(deg.R[g]))
res = three_term_test(deg, 12)
print("strict three-term:", res.passed, "-", res.failure)
print("  (the forced zero is structural: q_n(0) = 0 for every n >= 1 here")
print("   but q_0 is a nonzero constant, so evaluating the n = 1 relation")
print("   at x = 0 leaves c_1 q_0(0) = 0, hence c_1 = 0)")
print()

print("quotients q_(n+1)/x against the swapped-parameter preset:")
target = krall_preset(2, 1, [-2])
for n in range(4):
    quot = q_poly(deg, n + 1).shift_down(1)
    ref = q_poly(target, n)
    scale = quot.lead / ref.lead
    print(f"  n={n}: q/x = {render(quot)}  =  {rat_str(scale)} * ({render(ref)})")
