from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan_hankel import (
    JFraction,
    catalan_seq,
    combo_seq,
    hankel_transform,
    jfraction_extract,
    jfraction_series,
    principal_minors,
    ratio_check,
    tridiag_from_jfraction,
)
from catalan_hankel.jfrac import InsufficientPrecision, ZeroLeadingTerm

from oracles import hankel_det

positive_jf = st.integers(1, 5).flatmap(
    lambda d: st.tuples(
        st.lists(st.integers(-4, 4), min_size=d, max_size=d),
        st.lists(st.integers(1, 4), min_size=d - 1, max_size=d - 1),
    )
)


def test_catalan_coefficients():
    jf = jfraction_extract(catalan_seq(12), 6)
    assert jf.alphas == (1, 2, 2, 2, 2, 2)
    assert jf.betas == (1,) * 5


def test_normalized_example():
    jf = jfraction_extract(combo_seq(2, 1, 1, 4), 2)
    assert jf.alphas == (Fraction(19, 7), Fraction(489, 217))
    assert jf.betas == (Fraction(31, 49),)
    jf = jfraction_extract(combo_seq(2, 1, 1, 6), 3)
    assert jf.betas[1] == Fraction(805, 961)


@given(positive_jf)
def test_extract_inverts_expansion(data):
    alphas, betas = data
    jf = JFraction(tuple(alphas), tuple(betas))
    depth = len(alphas)
    seq = list(jfraction_series(jf, 2 * depth).coeffs)
    back = jfraction_extract(seq, depth)
    assert back.alphas == jf.alphas and back.betas == jf.betas


@given(positive_jf)
def test_hankel_determinants_factor_through_betas(data):
    alphas, betas = data
    jf = JFraction(tuple(alphas), tuple(betas))
    d = len(alphas)
    seq = list(jfraction_series(jf, 2 * d).coeffs)
    for n in range(d):
        expected = 1
        for k in range(1, n + 1):
            expected *= betas[k - 1] ** (n + 1 - k)
        assert hankel_det(seq, n) == expected


def test_tridiagonal_minors_are_transform_ratios():
    seq = combo_seq(2, 1, 1, 10)
    jf = jfraction_extract(seq, 5)
    minors = principal_minors(tridiag_from_jfraction(jf, 5))
    lo = hankel_transform(combo_seq(2, 1, 1, 10), 4)
    hi = hankel_transform(combo_seq(3, 1, 1, 10), 4)
    assert minors == [Fraction(h, l) for h, l in zip(hi, lo)]
    assert minors[:3] == [Fraction(19, 7), Fraction(170, 31), Fraction(1075, 115)]


def test_geometric_sequence_terminates():
    jf = jfraction_extract([1, 3, 9, 27, 81], 2)
    assert jf.terminated and jf.alphas == (3,)


def test_errors():
    with pytest.raises(InsufficientPrecision):
        jfraction_extract([1, 1, 2], 2)
    with pytest.raises(ZeroLeadingTerm):
        jfraction_extract([0, 1, 2], 1)
    with pytest.raises(InsufficientPrecision):
        tridiag_from_jfraction(JFraction((1,), ()), 2)


def test_ratio_check_grid():
    for m in range(4):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                assert ratio_check(m, a, b, 5).passed


def test_scale_recorded():
    jf = jfraction_extract([7, 19, 52, 154, 480], 2)
    assert jf.scale == 7
