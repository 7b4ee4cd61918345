from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lsobstruct import (
    Conclusion,
    JumpVector,
    SlopeInterval,
    classify,
    d_table,
    direct_profile,
    interval_data,
    is_square_free,
    kn_knot,
    lower_bound_line,
    polynomial_from_jump_vector,
    quick_bound,
    rational_nonfillable_interval,
    rough_estimate,
    weak_threshold,
)
from lsobstruct.errors import SlopeTooSmall, UnsupportedParity
from lsobstruct.families import builtin_knots

from conftest import even_jump_vectors

F = Fraction


def test_square_free_examples():
    assert is_square_free(13)
    assert not is_square_free(12)
    assert is_square_free(1)
    for n in range(0, 40):
        assert not is_square_free(8 * n + 4)


@given(st.integers(1, 10**6))
def test_square_free_against_factorization(n):
    assert is_square_free(n) == all(e == 1 for e in sympy.factorint(n).values())


def test_weak_threshold():
    assert weak_threshold(13) == F(3, 13)
    assert weak_threshold(12) == F(1, 4)
    assert weak_threshold(1) == 0


@given(st.integers(1, 500), st.fractions(min_value=-5, max_value=5))
def test_threshold_matches_bound(n, d):
    bound = 1 - F(1, n) if n % 2 else F(1)
    assert (4 * d >= bound) == (d >= weak_threshold(n))


def test_classify_pretzel_13(pretzel):
    v = classify(d_table(direct_profile(pretzel), 13))
    assert v.conclusion is Conclusion.OBSTRUCTED
    assert v.max_d == F(-23, 13)
    assert v.max_d < v.threshold == F(3, 13)
    assert v.weak_labels == ()
    assert v.conclusion.exit_code == 0


def test_classify_k1_13():
    v = classify(d_table(direct_profile(kn_knot(1).knot), 13))
    assert v.conclusion is Conclusion.OBSTRUCTED


def test_classify_not_square_free(pretzel):
    v = classify(d_table(direct_profile(pretzel), 12 + 8))  # 20 = 4*5
    assert v.conclusion is Conclusion.NOT_APPLICABLE
    assert not v.square_free
    k1 = classify(d_table(direct_profile(kn_knot(1).knot), 12))
    assert k1.conclusion is Conclusion.NOT_APPLICABLE
    assert k1.weak_labels == () and k1.all_negative


def test_classify_inconclusive():
    # large slope: label g is weak for r=(1,1), g=2 at n=10
    v = classify(d_table(direct_profile(polynomial_from_jump_vector((1, 1))), 10))
    assert v.conclusion is Conclusion.INCONCLUSIVE
    assert 2 in v.weak_labels


def test_verdict_invariants():
    for poly in builtin_knots():
        prof = direct_profile(poly)
        for n in range(2 * prof.genus - 1, 2 * prof.genus + 30):
            v = classify(d_table(prof, n))
            assert (v.conclusion is Conclusion.OBSTRUCTED) == (v.square_free and not v.weak_labels)


def test_rational_interval():
    k1 = kn_knot(1).knot
    assert rational_nonfillable_interval(k1, 13) == SlopeInterval(F(11), F(13))
    assert rational_nonfillable_interval(k1, 10) is None


def test_rational_interval_pretzel(pretzel):
    assert rational_nonfillable_interval(pretzel, 13) == SlopeInterval(F(13), F(13))
    # independent scan: largest square-free n in 13..20 whose table is all below threshold
    prof = direct_profile(pretzel)
    best = max(n for n in range(13, 21)
               if is_square_free(n) and all(d < weak_threshold(n) for d in d_table(prof, n).entries))
    assert rational_nonfillable_interval(pretzel, 20) == SlopeInterval(F(13), F(best))


def test_rational_interval_monotone():
    for poly in builtin_knots():
        prof = direct_profile(poly)
        for n in range(2 * prof.genus - 1, 2 * prof.genus + 12):
            if classify(d_table(prof, n)).conclusion is Conclusion.OBSTRUCTED:
                assert n in rational_nonfillable_interval(poly, n)


def test_quick_bound_examples():
    assert quick_bound(7, 13)
    assert not quick_bound(2, 9)
    assert quick_bound(6, 13)
    with pytest.raises(SlopeTooSmall):
        quick_bound(7, 12)


def test_rough_estimate_examples():
    assert rough_estimate(interval_data(JumpVector((1, 1, 1, 1, 1, 2))))
    assert rough_estimate(interval_data(JumpVector((1, 1, 1, 3))))
    d = interval_data(JumpVector((1, 1)))
    assert rough_estimate(d)
    assert classify(d_table(direct_profile(polynomial_from_jump_vector((1, 1))), 3)).all_negative
    with pytest.raises(UnsupportedParity):
        rough_estimate(interval_data(JumpVector((1,))))


def test_lower_bound_lines():
    assert lower_bound_line(interval_data(JumpVector((1, 1, 1, 1, 1, 2)))) == (F(-1, 3), F(7, 3), 1)
    # K_2: ratios 1/4, 1/4, 3/10 -> tie broken toward i=1
    assert lower_bound_line(interval_data(JumpVector((1, 1, 1, 1, 3, 3)))) == (F(-1, 4), F(5, 2), 1)


def test_lower_bound_line_under_staircase():
    for r in even_jump_vectors(10):
        d = interval_data(r)
        slope, intercept, _ = lower_bound_line(d)
        prof = direct_profile(polynomial_from_jump_vector(r))
        assert all(slope * j + intercept <= t for j, t in enumerate(prof.values))


def test_slope_interval():
    iv = SlopeInterval(F(11), F(13), low_closed=False)
    assert 12 in iv and 13 in iv and 11 not in iv
    inf = SlopeInterval(F(13), None, low_closed=False)
    assert 10**9 in inf and not inf.high_closed
    assert str(inf) == "(13, inf)"
    with pytest.raises(ValueError):
        SlopeInterval(F(2), F(1))
