import pytest
from hypothesis import given, settings, strategies as st

from catalan_hankel import (
    A,
    B,
    InsufficientTerms,
    Matrix,
    catalan_seq,
    conjugate_and_bands,
    det_cofactor,
    det_fraction_free,
    hankel_matrix,
    hankel_transform,
    penta_minors_gf,
    pentadiagonal,
    principal_minors,
    rational_expand,
)

from oracles import catalan_by_recurrence, hankel_det, leibniz_det
from strategies import int_matrices, poly_matrices, rationals


@given(int_matrices())
def test_bareiss_matches_leibniz_over_z(rows):
    assert det_fraction_free(Matrix(rows)) == leibniz_det(rows)


@settings(max_examples=60, deadline=None)
@given(poly_matrices())
def test_bareiss_matches_leibniz_over_polys(rows):
    assert det_fraction_free(Matrix(rows)) == leibniz_det(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_over_q(rows):
    assert det_fraction_free(Matrix(rows)) == leibniz_det(rows)


@given(int_matrices(lo=-2, hi=2))
def test_cofactor_matches_leibniz(rows):
    assert det_cofactor(Matrix(rows)) == leibniz_det(rows)


@given(int_matrices(lo=-3, hi=3))
def test_principal_minors_match_leading_blocks(rows):
    M = Matrix(rows)
    expected = [leibniz_det([r[:k] for r in rows[:k]]) for k in range(1, len(rows) + 1)]
    assert principal_minors(M) == expected


def test_zero_pivot_fallback():
    M = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    assert principal_minors(M) == [0, -1, -2]


def test_catalan_hankel_transform_is_all_ones():
    assert hankel_transform(catalan_seq(12), 6) == [1] * 7


def test_hankel_transform_against_leibniz():
    seq = catalan_by_recurrence(12)
    for k in range(4):
        shifted = seq[k:]
        assert hankel_transform(shifted, 4) == [hankel_det(shifted, n) for n in range(5)]


def test_hankel_matrix_needs_enough_terms():
    with pytest.raises(InsufficientTerms):
        hankel_matrix([1, 2, 3], 2)


@given(int_matrices(max_size=5, lo=-3, hi=3), st.randoms(use_true_random=False))
def test_unit_triangular_congruence_preserves_minors(rows, rnd):
    n = len(rows)
    sym = Matrix([[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)])
    T = Matrix([[1 if i == j else (rnd.randint(-3, 3) if j < i else 0) for j in range(n)] for i in range(n)])
    conj, bw = conjugate_and_bands(T, sym)
    assert principal_minors(conj) == principal_minors(sym)
    assert bw.width == conj.bandwidth().width


def test_conjugation_requires_unit_triangular():
    with pytest.raises(ValueError):
        conjugate_and_bands(Matrix([[2, 0], [0, 1]]), Matrix.identity(2))


@given(st.integers(-6, 9), st.integers(-6, 9), st.integers(-6, 9), st.integers(-6, 9))
def test_pentadiagonal_gf_matches_minors(a, b, c, r):
    n = 8
    minors = principal_minors(pentadiagonal(a, b, c, n, corner_shift=r))
    gf = rational_expand(penta_minors_gf(a, b, c, r), n)
    assert list(gf.coeffs) == [1] + minors


def test_pentadiagonal_gf_symbolic():
    n = 6
    minors = principal_minors(pentadiagonal(A, B, 1, n, corner_shift=1))
    gf = rational_expand(penta_minors_gf(A, B, 1, 1), n)
    assert list(gf.coeffs)[1:] == minors


def test_corollary_case():
    gf = penta_minors_gf(8, 5, 1, 1)
    assert gf.numerator == (1, 0, -1)
    assert gf.denominator == (1, -7, 17, -17, 7, -1)
    assert list(rational_expand(gf, 6).coeffs)[1:] == [7, 31, 115, 390, 1254, 3893]


def test_bandwidth_witness():
    M = Matrix([[1, 0, 3], [0, 1, 0], [0, 0, 1]])
    bw = M.bandwidth()
    assert bw.width == 2 and bw.witness == (0, 2)
