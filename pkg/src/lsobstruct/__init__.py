"""Exact d-invariant obstructions to weak symplectic fillings of L-space surgeries."""

from .alexpoly import (
    AlexanderPolynomial,
    ExponentSequence,
    JumpVector,
    genus,
    jump_vector_from_exponents,
    krcatovich_check,
    polynomial_from_jump_vector,
    torsion_direct,
    validate_lspace_form,
)
from .dinv import DInvariantTable, d_table, surgery_d, unknot_d
from .errors import *  # noqa: F401,F403
from .families import (
    KnFamilyMember,
    SlopeReport,
    Tag,
    kn_knot,
    kn_slope_classification,
    kn_torsion_closed_form,
    pretzel_p_2_3_11,
    tight_excluded_interval,
)
from .obstruction import (
    Conclusion,
    SlopeInterval,
    Verdict,
    classify,
    is_square_free,
    lower_bound_line,
    quick_bound,
    rational_nonfillable_interval,
    rough_estimate,
    weak_threshold,
)
from .torsion import IntervalData, TorsionProfile, direct_profile, interval_data, torsion_profile, torsion_step

__version__ = "0.1.0"
