from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catalan_hankel import (
    A,
    B,
    SequenceSpec,
    T_formula,
    T_matrix,
    catalan_number,
    catalan_seq,
    combo_seq,
    conjecture_sum,
    eqE1_product,
    hankel_poly,
    hankel_polys,
    hankel_transform,
    read_bfile,
    residual_seq,
    spine_bands,
    verify_T,
    verify_T_columns,
)
from catalan_hankel.catalan import prop_sum
from catalan_hankel.exact import poly_eval

from oracles import catalan_by_recurrence, hankel_det


def test_catalan_numbers_match_recurrence():
    assert catalan_seq(20) == catalan_by_recurrence(21)
    assert catalan_number(10) == 16796


@given(st.integers(0, 5), st.integers(-4, 4), st.integers(-4, 4))
def test_combo_seq_definition(m, a, b):
    c = catalan_by_recurrence(20)
    assert combo_seq(m, a, b, 6) == [a * c[n + m] + b * c[n + m + 1] for n in range(7)]


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 4), st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 4))
def test_symbolic_transform_specializes(m, a, b, n):
    # evaluation commutes with the determinant
    numeric = hankel_det(combo_seq(m, a, b, 2 * n), n)
    assert poly_eval(hankel_poly(m, n), a, b) == numeric


def test_symbolic_transform_is_homogeneous():
    for m in range(4):
        for n, p in enumerate(hankel_polys(m, 5)):
            assert p.is_homogeneous(n + 1)


def test_e1_product_matches_determinants():
    c = catalan_by_recurrence(30)
    for k in range(6):
        for n in range(5):
            assert eqE1_product(n, k) == hankel_det(c[k:], n)


def test_t_matrix_values():
    T2 = T_matrix(2, 5)
    assert T2.row(4) == (6, 35, 56, 36, 10)
    assert all(isinstance(T_formula(n, k, 3), Fraction) for n in range(3) for k in range(n + 2))


def test_t_formula_rejects_small_m():
    with pytest.raises(ValueError):
        T_formula(0, 0, 1)


def test_conjecture_sum_is_shift_m_minus_1():
    for m in (2, 3, 4):
        for n in range(4):
            assert conjecture_sum(n, m) == hankel_poly(m - 1, n)
    assert conjecture_sum(1, 2) != hankel_poly(2, 1)


def test_binomial_sum_closed_forms():
    for shift in range(3):
        for n in range(6):
            assert prop_sum(shift, n) == hankel_poly(shift, n)


def test_verify_T_counts():
    report = verify_T(5, 4)
    assert report.passed and len(report) == 20
    assert verify_T_columns(5, 4).passed


def test_verify_T_parallel_matches_serial():
    serial = verify_T(4, 3)
    parallel = verify_T(4, 3, workers=2)
    assert [c.label for c in serial.cases] == [c.label for c in parallel.cases]
    assert parallel.passed


def test_spine_and_residual():
    assert spine_bands(4) == [20 * A + 70 * B, 15 * A + 56 * B, 6 * A + 28 * B, A + 8 * B, B]
    assert residual_seq(1) == []
    assert residual_seq(3) == [A + 6 * B, B]


def test_sequence_spec():
    assert SequenceSpec("shifted", m=2).terms(3) == [2, 5, 14, 42]
    assert SequenceSpec("combo", 0, A, B).symbolic
    with pytest.raises(ValueError):
        SequenceSpec("nope")
    with pytest.raises(ValueError):
        SequenceSpec("explicit", values=(1, 2)).terms(5)


def test_read_bfile(tmp_path):
    path = tmp_path / "b000108.txt"
    path.write_text("# Catalan numbers\n0 1\n1 1\n2 2\n\n3 5\n4 14  \n")
    spec = read_bfile(path)
    assert spec.terms(4) == [1, 1, 2, 5, 14]
    assert hankel_transform(spec.terms(4), 2) == [1, 1, 1]


def test_read_bfile_rejects_gaps(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n2 2\n")
    with pytest.raises(ValueError):
        read_bfile(path)
