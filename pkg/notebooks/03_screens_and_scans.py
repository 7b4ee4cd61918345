"""
Fast screens and slope scans
============================

Two cheap tests bracket the full computation: the genus-only bound says when
some d-invariant must be weak, and the lower-bound line under the torsion
staircase certifies that K(2g-1) has only negative d-invariants.
"""

# %%
from lsobstruct import (
    classify,
    d_table,
    direct_profile,
    interval_data,
    lower_bound_line,
    polynomial_from_jump_vector,
    pretzel_p_2_3_11,
    quick_bound,
    rational_nonfillable_interval,
    rough_estimate,
)
from lsobstruct.alexpoly import JumpVector

knot = pretzel_p_2_3_11()
prof = direct_profile(knot)
g = prof.genus

# %%
print("slope  quick-bound  verdict")
for n in range(2 * g - 1, 2 * g + 16):
    v = classify(d_table(prof, n))
    print(f"{n:5d}  {str(quick_bound(g, n)):<11}  {v.conclusion.value}")

print("non-fillable rational slopes:", rational_nonfillable_interval(knot, 2 * g + 16))

# %%
# The line through (g, 0) under the staircase: -1/3 j + 7/3 for this knot.
slope, intercept, i_min = lower_bound_line(interval_data(JumpVector((1, 1, 1, 1, 1, 2))))
print(f"h(j) = {slope} j + {intercept}  (i_min = {i_min})")

# %%
# The rough estimate declines r = (1, 4); the exact table shows why: max d is 0.
r = JumpVector((1, 4))
print("rough estimate:", rough_estimate(interval_data(r)))
p = polynomial_from_jump_vector(r)
print("max d at 2g-1:", d_table(direct_profile(p), 2 * r.genus - 1).max_d)
