from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan_hankel import A, B, BivarPoly, InexactDivision, exact_divide, field_divide, render
from catalan_hankel.exact import parse_scalar, poly_eval

from strategies import polys, rationals, small_ints


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys, polys, small_ints, small_ints)
def test_evaluation_is_a_homomorphism(p, q, x, y):
    assert poly_eval(p * q, x, y) == poly_eval(p, x, y) * poly_eval(q, x, y)
    assert poly_eval(p + q, x, y) == poly_eval(p, x, y) + poly_eval(q, x, y)


@given(polys, polys)
def test_exact_divide_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_divide(q) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        (A + 1).exact_divide(A + B)
    with pytest.raises(InexactDivision):
        exact_divide(7, 2)
    with pytest.raises(ZeroDivisionError):
        A.exact_divide(0)


def test_render_canonical_order():
    assert render((A + 2 * B) ** 2) == "a^2 + 4*a*b + 4*b^2"
    assert render(-A + 3) == "-a + 3"
    assert render(BivarPoly()) == "0"
    assert render(Fraction(6, 4)) == "3/2"


def test_comparison_with_scalars():
    assert BivarPoly.constant(3) == 3
    assert BivarPoly.constant(3) == Fraction(3)
    assert BivarPoly.constant(3) != Fraction(7, 2)
    assert BivarPoly() == 0
    assert hash(BivarPoly.constant(5)) == hash(5)


@given(rationals, rationals.filter(bool))
def test_field_divide_over_q(x, y):
    q = field_divide(x, y)
    assert q * y == x
    if Fraction(q).denominator == 1:
        assert isinstance(q, int)


def test_field_divide_keeps_polynomials_exact():
    assert field_divide(A * A - B * B, A - B) == A + B
    with pytest.raises(InexactDivision):
        field_divide(A, B)


@given(st.sampled_from(["a", "b", "3", "-3/4", " 5 "]))
def test_parse_scalar(text):
    value = parse_scalar(text)
    assert render(value) in {"a", "b", "3", "-3/4", "5"}


def test_homogeneity_and_degree():
    p = A**2 + 4 * A * B + 4 * B**2
    assert p.is_homogeneous(2)
    assert not (p + A).is_homogeneous()
    assert p.total_degree() == 2
    assert p.leading_term() == ((2, 0), 1)
