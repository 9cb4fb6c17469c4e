from hypothesis import given, settings, strategies as st

import pytest

from catalan_hankel import (
    Matrix,
    NotRiordan,
    PowerSeries,
    RiordanPair,
    ballot_m,
    ballot_m_tilde,
    column_rescale,
    ftra_apply,
    matrix_from_production,
    pascal,
    production_matrix,
    riordan_entry,
    riordan_inverse,
    riordan_mul,
)
from catalan_hankel.matrix import inverse_lower

from oracles import binomial, catalan_by_recurrence, riordan_entry_naive

N = 6
tails = st.lists(st.integers(-4, 4), min_size=N, max_size=N)


def pair_from(gt, ft):
    g = PowerSeries([1] + gt[: N])
    f = PowerSeries([0, 1] + ft[: N - 1])
    return RiordanPair(g, f)


@given(tails, tails)
def test_entry_matches_naive(gt, ft):
    R = pair_from(gt, ft)
    g, f = list(R.g.coeffs), list(R.f.coeffs)
    for n in range(N + 1):
        for k in range(n + 1):
            assert riordan_entry(R, n, k) == riordan_entry_naive(g, f, n, k)


@settings(deadline=None)
@given(tails, tails, tails, tails)
def test_group_law_is_matrix_product(g1, f1, g2, f2):
    R, S = pair_from(g1, f1), pair_from(g2, f2)
    assert riordan_mul(R, S).matrix() == R.matrix() @ S.matrix()


@settings(deadline=None)
@given(tails, tails)
def test_inverse(gt, ft):
    R = pair_from(gt, ft)
    assert riordan_inverse(R).matrix() == inverse_lower(R.matrix())
    assert (R * R.inverse()) == RiordanPair.identity(N)


@given(tails, tails, st.lists(st.integers(-5, 5), min_size=N + 1, max_size=N + 1))
def test_ftra_is_matrix_times_vector(gt, ft, h):
    R = pair_from(gt, ft)
    assert list(ftra_apply(R, PowerSeries(h)).coeffs) == R.matrix().apply(h)


def test_pascal_row_sums():
    P = pascal(8).matrix()
    assert [sum(P.row(n)) for n in range(9)] == [2**n for n in range(9)]
    assert P.row(4)[:5] == (1, 4, 6, 4, 1)


def test_ballot_entries():
    M, Mt = ballot_m(6).matrix(), ballot_m_tilde(6).matrix()
    for n in range(7):
        for k in range(n + 1):
            assert M[n, k] == (-1) ** (n - k) * binomial(n + k, 2 * k)
            assert Mt[n, k] == (-1) ** (n - k) * binomial(n + k + 1, 2 * k + 1)


def test_ballot_inverse_is_catalan_triangle():
    # inverse of M has first column the Catalan numbers
    inv = ballot_m(6).inverse().matrix()
    assert list(inv.column(0)) == catalan_by_recurrence(7)


def test_invalid_pairs():
    with pytest.raises(NotRiordan):
        RiordanPair(PowerSeries([0, 1, 0]), PowerSeries([0, 1, 0]))
    with pytest.raises(NotRiordan):
        RiordanPair(PowerSeries([1, 1, 0]), PowerSeries([1, 1, 0]))


@given(st.lists(st.integers(-4, 4), min_size=5, max_size=5), st.lists(st.integers(1, 4), min_size=4, max_size=4))
def test_production_roundtrip(diag, sup):
    n = 5
    P = Matrix.from_function(n, n, lambda i, j: diag[i] if i == j else sup[i] if j == i + 1 else (1 if j == i - 1 else 0))
    L = matrix_from_production(P, n)
    assert L.is_lower_triangular()
    assert production_matrix(L) == P.leading(n - 1)


def test_production_matrix_of_pascal_is_bidiagonal():
    P = production_matrix(pascal(5).matrix())
    assert P == Matrix.from_function(5, 5, lambda i, j: 1 if j in (i, i + 1) else 0)


def test_column_rescale():
    L = Matrix([[1, 0], [4, 6]])
    assert column_rescale(L, 3) == Matrix([[1, 0], [4, 2]])
