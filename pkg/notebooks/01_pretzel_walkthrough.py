"""
From an Alexander polynomial to a fillability verdict: P(-2,3,11)
=================================================================

The pretzel knot P(-2,3,11) is an L-space knot of genus 7.  We follow its
polynomial through jump vector, interval data, torsion coefficients and the
d-invariants of 13-surgery.
"""

# %%
from fractions import Fraction

from lsobstruct import (
    classify,
    d_table,
    interval_data,
    jump_vector_from_exponents,
    pretzel_p_2_3_11,
    torsion_profile,
    validate_lspace_form,
)

knot = pretzel_p_2_3_11()
print(knot)

# %%
# The staircase shape gives the ascending exponents; every second gap is a jump.
seq = validate_lspace_form(knot)
r = jump_vector_from_exponents(seq)
print("exponents:", seq.exponents)
print("r =", r.r)

# %%
# Positive coefficients sit at a_0..a_h, negative ones at b_1..b_h.
d = interval_data(r)
print("a =", d.a, " b =", d.b)
print("rising intervals:", d.rising_intervals())

# %%
profile = torsion_profile(d)
for j, t in enumerate(profile.values):
    print(f"t_{j} = {t}  " + "*" * t)

# %%
# 13 = 2g - 1 is the smallest L-space slope, and it is square-free.
table = d_table(profile, 13)
for i, value in enumerate(table.entries):
    print(f"d(K(13), {i}) = {value}  (approx {float(value):.4f})")

verdict = classify(table)
print(verdict.conclusion.value, "max d =", verdict.max_d, "threshold =", verdict.threshold)
assert verdict.max_d < Fraction(0)
