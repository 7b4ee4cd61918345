"""
The K_n family: torsion closed form, negative d-invariants, slope reports
=======================================================================

K_n has jump vector (1 x (n+2), 3 x n) and genus 4n+2.  Its torsion
coefficients follow n - floor((j+2)/4) + 1, and every d-invariant of
K_n(8n+3), K_n(8n+4), K_n(8n+5) is negative.
"""

# %%
from lsobstruct import (
    d_table,
    direct_profile,
    kn_knot,
    kn_slope_classification,
    kn_torsion_closed_form,
)

member = kn_knot(2)
print(member.knot)
print("genus", member.genus, "jump vector", member.jump_vector.r)
print("braid word", member.braid_word)

# %%
profile = direct_profile(member.knot)
print("t_j        ", profile.values)
print("closed form", tuple(kn_torsion_closed_form(2, j) for j in range(11)))

# %%
for n in range(1, 6):
    prof = direct_profile(kn_knot(n).knot)
    maxima = [d_table(prof, 8 * n + k).max_d for k in (3, 4, 5)]
    print(n, [str(m) for m in maxima])

# %%
# Slope classification: tight structures off [8n+1, 8n+3], no weak fillings on [8n+3, m].
for n in (1, 2, 3, 5):
    rep = kn_slope_classification(n)
    print(f"n={n} m={rep.m} tight-excluded={rep.tight_excluded} nonfillable={rep.nonfillable}")
    for interval, tag in rep.classification:
        print("    ", interval, tag.value)
