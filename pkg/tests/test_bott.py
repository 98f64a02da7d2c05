import pytest
from hypothesis import given, settings, strategies as st

from detlab import bott
from detlab.bott import (
    BundleExpression,
    bott_cohomology,
    check_dualizing_vanishing,
    check_fm_kernel,
    check_hom_vanishing,
    check_tilting_grass,
    check_tilting_springer,
    cohomology_of,
    det_q,
    schur_q,
    serre_dual_term,
    sym_q,
    wedge_q,
    wedge_q_dual,
    wedge_r,
)
from detlab.partitions import all_partitions, weyl_dim


def test_line_bundles_on_p1():
    assert bott_cohomology(1, 2, (0,), (1,)).is_zero()  # O(-1)
    t = bott_cohomology(1, 2, (0,), (2,))  # O(-2)
    assert t.degrees() == {1: 1}
    t = bott_cohomology(1, 2, (3,), (0,))  # O(3)
    assert t.degrees() == {0: 4}


def test_grass24_repeat_kills():
    assert bott_cohomology(2, 4, (1, -1), (0, 0)).is_zero()


def test_structure_sheaf():
    t = cohomology_of(BundleExpression(2, 4, ()))
    assert t.degrees() == {0: 1}


def test_grass24_hom_shadow_vanishes_everywhere():
    expr = BundleExpression(2, 4, (wedge_q_dual(2), sym_q(2)))
    assert cohomology_of(expr).is_zero()


def test_top_wedge_sub_is_minus_one_twist():
    # wedge^(m-1) of the sub on projective (m-1)-space has no cohomology
    expr = BundleExpression(1, 3, (wedge_r(2),))
    assert cohomology_of(expr).is_zero()


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        bott_cohomology(2, 4, (0, 1), (0, 0))


@st.composite
def pure_terms(draw):
    m = draw(st.integers(2, 5))
    l = draw(st.integers(1, m - 1))
    x = tuple(sorted(draw(st.lists(st.integers(-4, 4), min_size=l, max_size=l)), reverse=True))
    y = tuple(
        sorted(draw(st.lists(st.integers(-4, 4), min_size=m - l, max_size=m - l)), reverse=True)
    )
    return l, m, x, y


@given(pure_terms())
@settings(max_examples=200)
def test_bott_trichotomy(term):
    l, m, x, y = term
    t = bott_cohomology(l, m, x, y)
    assert len(t.entries) <= 1
    for deg in t.entries:
        assert 0 <= deg <= l * (m - l)


@given(pure_terms())
@settings(max_examples=150)
def test_serre_duality(term):
    l, m, x, y = term
    d = l * (m - l)
    t = bott_cohomology(l, m, x, y)
    xd, yd = serre_dual_term(l, m, x, y)
    td = bott_cohomology(l, m, xd, yd)
    dims = t.degrees()
    dual_dims = td.degrees()
    assert dims == {d - i: v for i, v in dual_dims.items()}


def test_global_sections_of_schur_bundles():
    for m in (2, 3, 4):
        for l in range(1, m):
            for delta in all_partitions(4, max_rows=l):
                t = cohomology_of(
                    BundleExpression(l, m, (schur_q(delta.padded(l)),))
                )
                assert t.degrees() == {0: weyl_dim(delta.padded(m))}


def test_euler_additivity():
    expr = BundleExpression(2, 4, (wedge_q(1), wedge_q_dual(2), det_q(1)))
    total = cohomology_of(expr)
    by_terms = 0
    for x, y, mult in expr.normalize():
        by_terms += mult * bott_cohomology(2, 4, x, y).euler()
    assert total.euler() == by_terms


def test_hom_vanishing_examples():
    assert check_hom_vanishing(2, 4, (2, 2), (2, 1)).passed
    assert check_hom_vanishing(1, 2, (1,), ()).passed
    assert check_hom_vanishing(2, 5, (3, 1), (4, 4)).passed


def test_hom_vanishing_rejects_bad_input():
    with pytest.raises(ValueError):
        check_hom_vanishing(2, 4, (3, 1), ())  # alpha outside the box
    with pytest.raises(ValueError):
        check_hom_vanishing(2, 4, (2, 2), (1, 1, 1))  # delta too tall


def test_tilting_grass_counts():
    rep = check_tilting_grass(1, 3)
    assert rep.passed and len(rep.cases) == 9
    rep = check_tilting_grass(2, 4)
    assert rep.passed and len(rep.cases) == 36
    rep = check_tilting_grass(2, 5)
    assert rep.passed and len(rep.cases) == 100


def test_tilting_springer_examples():
    assert check_tilting_springer(1, 2, 2, 3).passed
    assert check_tilting_springer(1, 2, 3, 3).passed
    assert check_tilting_springer(2, 3, 3, 2).passed


def test_dualizing_examples():
    assert check_dualizing_vanishing(1, 2, 3, 3).passed
    assert check_dualizing_vanishing(1, 2, 2, 3).passed
    assert check_dualizing_vanishing(2, 3, 4, 2).passed


def test_dualizing_rejects_m_greater_n():
    with pytest.raises(ValueError):
        check_dualizing_vanishing(1, 3, 2, 2)


def test_fm_kernel_examples():
    assert check_fm_kernel(1, 2, 3, 4).passed
    assert check_fm_kernel(2, 4, 4, 2).passed
    assert check_fm_kernel(1, 3, 3, 4).passed


def test_reports_declare_characteristic_zero():
    rep = check_tilting_grass(1, 2)
    assert any("characteristic" in a for a in rep.assumptions)
    assert rep.to_json()["assumptions"]
