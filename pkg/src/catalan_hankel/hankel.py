"""Hankel matrices, exact determinants and principal minor sequences."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .exact import exact_divide
from .matrix import Bandwidth, Matrix
from .series import RationalGF


class InsufficientTerms(ValueError):
    pass


def hankel_matrix(seq: Sequence, n: int) -> Matrix:
    """The ``(n+1) x (n+1)`` matrix with entry ``(i, j) = seq[i + j]``."""
    if len(seq) < 2 * n + 1:
        raise InsufficientTerms(f"a {n + 1}x{n + 1} Hankel matrix needs {2 * n + 1} terms, got {len(seq)}")
    s = list(seq)
    return Matrix.from_function(n + 1, n + 1, lambda i, j: s[i + j])


def _bareiss_step(M: list, k: int, prev) -> None:
    n = len(M)
    pivot = M[k][k]
    for i in range(k + 1, n):
        lead = M[i][k]
        row_i, row_k = M[i], M[k]
        for j in range(k + 1, n):
            num = row_i[j] * pivot - lead * row_k[j]
            row_i[j] = exact_divide(num, prev) if num != 0 else 0
        row_i[k] = 0


def det_fraction_free(M: Matrix):
    """Determinant by Bareiss elimination with row swaps on zero pivots.

    Every division is exact in any integral domain, so the same code serves
    Z, Q and Z[a, b].
    """
    n = M.size
    if n == 0:
        return 1
    rows = [list(r) for r in M.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        _bareiss_step(rows, k, prev)
        prev = rows[k][k]
    d = rows[n - 1][n - 1]
    return d if sign == 1 else -d


def det_cofactor(M: Matrix):
    """Laplace expansion along the first row; only for small matrices."""
    n = M.size
    if n == 0:
        return 1
    if n == 1:
        return M[0, 0]
    total = 0
    for j in range(n):
        if M[0, j] == 0:
            continue
        minor = Matrix([r[:j] + r[j + 1:] for r in M.rows[1:]])
        term = M[0, j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def principal_minors(M: Matrix, n_max: int | None = None) -> List:
    """Leading principal minors ``d_1 .. d_{n_max}`` from one elimination pass.

    Without pivoting the Bareiss pivot at step ``k`` is exactly ``d_{k+1}``.
    A zero pivot stops the pass; the remaining minors are then taken one at
    a time with :func:`det_fraction_free`.
    """
    size = M.size
    n_max = size if n_max is None else n_max
    if n_max > size:
        raise ValueError(f"asked for {n_max} minors of a {size}x{size} matrix")
    rows = [list(r[:n_max]) for r in M.rows[:n_max]]
    minors = []
    prev = 1
    for k in range(n_max):
        pivot = rows[k][k]
        minors.append(pivot)
        if k == n_max - 1:
            break
        if pivot == 0:
            for j in range(k + 2, n_max + 1):
                minors.append(det_fraction_free(M.leading(j)))
            break
        _bareiss_step(rows, k, prev)
        prev = pivot
    return minors


def hankel_transform(seq: Sequence, n_max: int) -> List:
    """``h_n = det(hankel_matrix(seq, n))`` for ``n = 0 .. n_max``."""
    return principal_minors(hankel_matrix(seq, n_max))


def conjugate_and_bands(T: Matrix, H: Matrix) -> Tuple[Matrix, Bandwidth]:
    """``T H T^t`` and its exact bandwidth.

    ``T`` must be unit lower triangular, which makes the leading principal
    minors of the product equal to those of ``H``.
    """
    if T.shape != H.shape:
        raise ValueError(f"size mismatch: {T.shape} vs {H.shape}")
    if not T.is_unit_lower_triangular():
        raise ValueError("conjugating matrix must be unit lower triangular")
    out = T @ H @ T.T
    return out, out.bandwidth()


def pentadiagonal(diagonal, band1, band2, size: int, corner_shift=0) -> Matrix:
    """Symmetric pentadiagonal Toeplitz matrix with ``(0, 0)`` entry ``diagonal - corner_shift``."""
    bands = {0: diagonal, 1: band1, 2: band2}

    def entry(i, j):
        d = abs(i - j)
        if d > 2:
            return 0
        if i == j == 0:
            return diagonal - corner_shift
        return bands[d]

    return Matrix.from_function(size, size, entry)


def penta_minors_gf(a, b, c, r) -> RationalGF:
    """Generating function ``sum_k d_k x^k`` (with ``d_0 = 1``) of the principal
    minors of :func:`pentadiagonal` ``(a, b, c, corner_shift=r)``.

    Homogeneous in ``(a, b, c, r)``; at ``c = 1`` the coefficients reduce to
    ``1-(r-1)x-rx^2`` over ``1-(a-1)x-(a-b^2)x^2+(a-b^2)x^3+(a-1)x^4-x^5``.
    """
    q = a * c - b * b
    numerator = (1, -(r - c), -(r * c))
    denominator = (1, -(a - c), -q, c * q, c**3 * (a - c), -(c**5))
    return RationalGF(numerator, denominator)
