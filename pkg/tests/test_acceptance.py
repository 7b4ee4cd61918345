"""Exit criteria.  Each test prints one PASS/FAIL line in the pytest terminal summary."""

import functools
import time
from fractions import Fraction
from pathlib import Path

from lsobstruct import (
    Conclusion,
    SlopeInterval,
    Tag,
    classify,
    d_table,
    direct_profile,
    interval_data,
    is_square_free,
    jump_vector_from_exponents,
    kn_knot,
    kn_slope_classification,
    kn_torsion_closed_form,
    polynomial_from_jump_vector,
    pretzel_p_2_3_11,
    quick_bound,
    rough_estimate,
    surgery_d,
    torsion_direct,
    torsion_profile,
    validate_lspace_form,
)
from lsobstruct.cli import plot_files

from conftest import even_jump_vectors

F = Fraction
GOLDEN = Path(__file__).parent / "golden"
RESULTS = []


def criterion(number, title, limit):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                fn()
                elapsed = time.perf_counter() - start
                assert limit is None or elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            except BaseException as exc:
                RESULTS.append(f"FAIL  AC{number} {title}: {exc}")
                raise
            RESULTS.append(f"PASS  AC{number} {title} ({elapsed:.2f}s)")
        return run
    return wrap


def _r(poly):
    return jump_vector_from_exponents(validate_lspace_form(poly))


@criterion(1, "P(-2,3,11) worked example", 1.0)
def test_ac1_pretzel_example():
    poly = pretzel_p_2_3_11()
    r = _r(poly)
    assert r.r == (1, 1, 1, 1, 1, 2)
    d = interval_data(r)
    assert d.a == (7, 4, 2, 0)
    assert d.b == (6, 3, 1)
    prof = torsion_profile(d)
    assert prof.values == (3, 3, 2, 2, 1, 1, 1, 0)
    assert list(prof.values) == [torsion_direct(poly, j) for j in range(8)]
    table = d_table(prof, 13)
    assert all(x < 0 for x in table.entries)
    assert classify(table).conclusion is Conclusion.OBSTRUCTED


@criterion(2, "K_n torsion: closed form = interval formula = direct sum, n<=50", 10.0)
def test_ac2_triple_equivalence():
    for n in range(1, 51):
        member = kn_knot(n)
        g = 4 * n + 2
        via_intervals = torsion_profile(interval_data(_r(member.knot), g))
        for j in range(g + 3):
            closed = kn_torsion_closed_form(n, j)
            assert closed == via_intervals[j] == torsion_direct(member.knot, j), (n, j)


@criterion(3, "K_n(8n+k), k=3,4,5: all d-invariants negative, bound at 4n+1 holds, n<=50", 30.0)
def test_ac3_negative_d_invariants():
    for n in range(1, 51):
        prof = direct_profile(kn_knot(n).knot)
        for k in (3, 4, 5):
            table = d_table(prof, 8 * n + k)
            assert all(x < 0 for x in table.entries), (n, k)
            bound = F(-24 * n + k * k - 7 * k + 4, 4 * (8 * n + k))
            assert table[4 * n + 1] <= bound, (n, k)


@criterion(4, "K_n slope reports (non-fillable and tight intervals)", 10.0)
def test_ac4_slope_reports():
    rep = kn_slope_classification(1)
    assert rep.nonfillable == SlopeInterval(F(11), F(13))
    assert rep.tight_excluded == SlopeInterval(F(9), F(11))
    assert kn_slope_classification(2).nonfillable == SlopeInterval(F(19), F(21))
    checked = 0
    for n in range(1, 51):
        if not is_square_free(8 * n + 5):
            continue
        rep = kn_slope_classification(n)
        target = SlopeInterval(F(8 * n + 3), F(8 * n + 5), low_closed=False)
        assert (target, Tag.TIGHT_NONFILLABLE) in rep.classification, n
        for q in (F(8 * n + 3) + F(1, 7), F(8 * n + 4), F(8 * n + 5)):
            assert rep.tag_of(q) is Tag.TIGHT_NONFILLABLE
        checked += 1
    assert checked > 0


@criterion(5, "interval-formula profile = direct sum, all admissible even-k r with sum<=12", 60.0)
def test_ac5_torsion_oracle_exhaustive():
    vectors = even_jump_vectors(12)
    assert len(vectors) > 100
    for r in vectors:
        poly = polynomial_from_jump_vector(r)
        prof = torsion_profile(interval_data(r))
        assert list(prof.values) == [torsion_direct(poly, j) for j in range(r.genus + 1)], r.r


@criterion(6, "screen soundness (rough estimate, quick bound) over the same family", 120.0)
def test_ac6_screen_soundness():
    fired_rough = fired_quick = 0
    for r in even_jump_vectors(12):
        g = r.genus
        prof = direct_profile(polynomial_from_jump_vector(r))
        if rough_estimate(interval_data(r)):
            fired_rough += 1
            assert all(x < 0 for x in d_table(prof, 2 * g - 1).entries), r.r
        for n in range(2 * g - 1, 4 * g + 8):
            if not quick_bound(g, n):
                fired_quick += 1
                assert classify(d_table(prof, n)).weak_labels, (r.r, n)
    assert fired_rough and fired_quick


@criterion(7, "d-table branch formulas agree with the surgery formula, n in [2g-1, 2g+20]", 30.0)
def test_ac7_branch_consistency():
    knots = [pretzel_p_2_3_11()] + [kn_knot(n).knot for n in range(1, 51)]
    for poly in knots:
        direct = direct_profile(poly)
        via_intervals = torsion_profile(interval_data(_r(poly)))
        g = direct.genus
        for n in range(2 * g - 1, 2 * g + 21):
            table = d_table(via_intervals, n)
            for i in table.labels():
                assert table[i] == surgery_d(direct, n, i), (poly.name, n, i)


@criterion(8, "plot-data CSVs byte-match golden torsion and bound-line files", None)
def test_ac8_plot_golden():
    for poly, folder in ((pretzel_p_2_3_11(), "p_2_3_11"), (kn_knot(2).knot, "k2")):
        files = plot_files(poly)
        for name in ("torsion.csv", "bound.csv"):
            assert files[name].encode("utf-8") == (GOLDEN / folder / name).read_bytes(), (folder, name)
