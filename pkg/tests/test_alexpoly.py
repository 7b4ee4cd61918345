import pytest
from hypothesis import given, strategies as st

from lsobstruct import (
    AlexanderPolynomial,
    ExponentSequence,
    JumpVector,
    genus,
    jump_vector_from_exponents,
    kn_knot,
    krcatovich_check,
    polynomial_from_jump_vector,
    torsion_direct,
    validate_lspace_form,
)
from lsobstruct.errors import (
    DegenerateSequence,
    EmptyPolynomial,
    InvalidJump,
    NotLSpaceForm,
)

# t^7-t^6+t^4-t^3+t^2-t+1-... as printed for P(-2,3,11)
PRETZEL_TERMS = {7: 1, 6: -1, 4: 1, 3: -1, 2: 1, 1: -1, 0: 1}


def pretzel_literal():
    d = dict(PRETZEL_TERMS)
    d.update({-e: c for e, c in PRETZEL_TERMS.items()})
    return AlexanderPolynomial(d)


def test_validate_pretzel():
    seq = validate_lspace_form(pretzel_literal())
    assert seq.exponents == (-7, -6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 6, 7)
    assert seq.k == 6


def test_validate_unknot():
    seq = validate_lspace_form(AlexanderPolynomial({0: 1}))
    assert seq.exponents == (0,)
    assert seq.k == 0


def test_validate_rejects_coefficient_two():
    bad = AlexanderPolynomial({2: 2, 1: -1, 0: 1, -1: -1, -2: 1})
    with pytest.raises(NotLSpaceForm) as exc:
        validate_lspace_form(bad)
    assert exc.value.condition == "coefficient not +-1"


@pytest.mark.parametrize("coeffs, condition", [
    ({1: 1, 0: 1, -1: 1}, "signs do not alternate from the top"),
    ({2: 1, 0: -1, -1: 1}, "not symmetric"),
    ({3: 1, 1: -1, 0: 1, -1: -1, -3: 1}, "top gap is not 1"),
    ({1: -1, 0: 1, -1: -1}, "signs do not alternate from the top"),
])
def test_validate_conditions(coeffs, condition):
    with pytest.raises(NotLSpaceForm) as exc:
        validate_lspace_form(AlexanderPolynomial(coeffs))
    assert exc.value.condition == condition


def test_validate_empty():
    with pytest.raises(EmptyPolynomial):
        validate_lspace_form(AlexanderPolynomial({}))


def test_jump_vector_pretzel():
    r = jump_vector_from_exponents(validate_lspace_form(pretzel_literal()))
    assert r.r == (1, 1, 1, 1, 1, 2)


def test_jump_vector_k1():
    r = jump_vector_from_exponents(validate_lspace_form(kn_knot(1).knot))
    assert r.r == (1, 1, 1, 3)


def test_jump_vector_trefoil_like():
    assert jump_vector_from_exponents(ExponentSequence((-1, 0, 1))).r == (1,)


def test_jump_vector_unknot():
    with pytest.raises(DegenerateSequence):
        jump_vector_from_exponents(ExponentSequence((0,)))


def test_polynomial_from_jump_vector_examples():
    assert polynomial_from_jump_vector((1, 1, 1, 1, 1, 2)) == pretzel_literal()
    assert polynomial_from_jump_vector((1,)) == AlexanderPolynomial({1: 1, 0: -1, -1: 1})
    k1 = AlexanderPolynomial({0: 1, 2: 1, -2: 1, 6: 1, -6: 1, 1: -1, -1: -1, 5: -1, -5: -1})
    assert polynomial_from_jump_vector((1, 1, 1, 3)) == k1


@pytest.mark.parametrize("r", [(0, 1), (2, 1), (1, -3)])
def test_invalid_jump(r):
    with pytest.raises(InvalidJump):
        JumpVector(r)


def test_genus():
    assert genus(pretzel_literal()) == 7
    assert genus(AlexanderPolynomial({0: 1})) == 0
    for n in range(1, 8):
        assert genus(kn_knot(n).knot) == 4 * n + 2


def test_krcatovich_examples():
    assert krcatovich_check(JumpVector((1, 1, 1, 1, 1, 2))) == []
    assert 2 in krcatovich_check(JumpVector((1, 3, 1, 1)))
    assert krcatovich_check(JumpVector((1,))) == []


def test_torsion_direct_examples():
    p = pretzel_literal()
    assert torsion_direct(p, 0) == 3
    assert torsion_direct(p, 6) == 1
    assert torsion_direct(p, -6) == 1
    for j in range(7, 12):
        assert torsion_direct(p, j) == 0


jump_vectors = st.lists(st.integers(1, 6), min_size=0, max_size=12).map(lambda xs: JumpVector((1,) + tuple(xs)))


@given(jump_vectors)
def test_round_trip(r):
    poly = polynomial_from_jump_vector(r)
    seq = validate_lspace_form(poly)
    assert jump_vector_from_exponents(seq) == r
    assert polynomial_from_jump_vector(jump_vector_from_exponents(seq)) == poly
    assert poly.evaluate(1) == 1
    assert poly.is_symmetric()
    assert poly.coeffs[-1] == (r.genus, 1)


@given(jump_vectors)
def test_torsion_direct_monotone(r):
    poly = polynomial_from_jump_vector(r)
    g = genus(poly)
    ts = [torsion_direct(poly, j) for j in range(g + 2)]
    assert all(a >= b for a, b in zip(ts, ts[1:]))
    assert ts[g] == 0 and ts[g - 1] == 1
    if r.k % 2 == 0:
        assert ts[0] == sum(r.r[: r.k // 2])
