"""Riordan arrays: pairs ``(g, f)`` of power series and their matrices.

The matrix of ``(g, f)`` has entry ``(n, k) = [x^n] g(x) f(x)^k``.  Pairs
multiply as ``(g, f)(u, v) = (g * u(f), v(f))`` and act on series through
the fundamental theorem ``(g, f) h = g * h(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import exact_divide
from .matrix import Matrix, solve_lower
from .series import OrderMismatch, PowerSeries


class NotRiordan(ValueError):
    pass


@dataclass(frozen=True)
class RiordanPair:
    g: PowerSeries
    f: PowerSeries

    def __post_init__(self):
        if self.g.order != self.f.order:
            raise OrderMismatch("g and f must share a truncation order")
        if self.g[0] == 0:
            raise NotRiordan("g(0) must be nonzero")
        if self.f[0] != 0:
            raise NotRiordan("f(0) must be zero")
        if self.f.order < 1 or self.f[1] == 0:
            raise NotRiordan("f'(0) must be nonzero")

    @property
    def order(self) -> int:
        return self.g.order

    @classmethod
    def identity(cls, order: int) -> "RiordanPair":
        return cls(PowerSeries.one(order), PowerSeries.x(order))

    def column(self, k: int) -> PowerSeries:
        """Generating function ``g * f**k`` of column ``k``."""
        return self.g * self.f**k

    def entry(self, n: int, k: int):
        return riordan_entry(self, n, k)

    def matrix(self, size: int | None = None) -> Matrix:
        """Lower-triangular realization, ``size x size`` (default: full order)."""
        size = self.order + 1 if size is None else size
        if size > self.order + 1:
            raise ValueError(f"pair is only known to order {self.order}")
        cols = []
        col = self.g
        for _ in range(size):
            cols.append(col.coeffs[:size])
            col = col * self.f
        return Matrix.from_function(size, size, lambda n, k: cols[k][n] if k <= n else 0)

    def __mul__(self, other: "RiordanPair") -> "RiordanPair":
        return riordan_mul(self, other)

    def inverse(self) -> "RiordanPair":
        return riordan_inverse(self)

    def apply(self, h: PowerSeries) -> PowerSeries:
        return ftra_apply(self, h)


def riordan_entry(R: RiordanPair, n: int, k: int):
    if n > R.order or k > R.order or n < 0 or k < 0:
        raise IndexError(f"({n}, {k}) lies beyond truncation order {R.order}")
    if k > n:
        return 0
    return R.column(k)[n]


def riordan_mul(R1: RiordanPair, R2: RiordanPair) -> RiordanPair:
    if R1.order != R2.order:
        raise OrderMismatch(f"orders differ: {R1.order} vs {R2.order}")
    return RiordanPair(R1.g * R2.g.compose(R1.f), R2.f.compose(R1.f))


def riordan_inverse(R: RiordanPair) -> RiordanPair:
    fbar = R.f.revert()
    return RiordanPair(R.g.compose(fbar).inverse(), fbar)


def ftra_apply(R: RiordanPair, h: PowerSeries) -> PowerSeries:
    if h.order != R.order:
        raise OrderMismatch(f"orders differ: {R.order} vs {h.order}")
    return R.g * h.compose(R.f)


# -- named arrays ---------------------------------------------------------------


def pascal(order: int) -> RiordanPair:
    """``(1/(1-x), x/(1-x))``: binomial coefficients."""
    x = PowerSeries.x(order)
    g = PowerSeries.geometric(1, order)
    return RiordanPair(g, x * g)


def ballot_m(order: int) -> RiordanPair:
    """``(1/(1+x), x/(1+x)^2)``; entries ``(-1)^(n-k) C(n+k, 2k)``."""
    x = PowerSeries.x(order)
    g = PowerSeries.geometric(-1, order)
    return RiordanPair(g, x * g * g)


def ballot_m_tilde(order: int) -> RiordanPair:
    """``(1/(1+x)^2, x/(1+x)^2)``; entries ``(-1)^(n-k) C(n+k+1, 2k+1)``."""
    x = PowerSeries.x(order)
    g = PowerSeries.geometric(-1, order)
    return RiordanPair(g * g, x * g * g)


# -- production matrices ------------------------------------------------------


def production_matrix(L: Matrix) -> Matrix:
    """``P = L^{-1} Lbar`` where ``Lbar`` is ``L`` with its first row removed.

    For an ``n x n`` input the result is the ``(n-1) x (n-1)`` Hessenberg
    matrix satisfying ``L[:n-1, :n-1] P = Lbar[:, :n-1]``.
    """
    n = L.size
    if n < 2:
        raise ValueError("production matrix needs at least a 2x2 triangle")
    if not L.is_lower_triangular():
        raise ValueError("matrix is not lower triangular")
    top = L.leading(n - 1)
    lbar = L.block(slice(1, n), slice(0, n - 1))
    return solve_lower(top, lbar)


def matrix_from_production(P: Matrix, n: int) -> Matrix:
    """Lower-triangular matrix with first row ``(1, 0, ...)`` and ``row_{i+1} = row_i P``."""
    if n > P.size:
        raise ValueError(f"a {P.size}x{P.size} production matrix determines at most {P.size} rows")
    for i in range(n - 1):
        if P[i, i + 1] == 0:
            raise ValueError(f"superdiagonal entry ({i},{i + 1}) is zero")
    rows = [[1] + [0] * (n - 1)]
    for _ in range(1, n):
        prev = rows[-1]
        new = []
        for j in range(n):
            acc = 0
            for k in range(n):
                if prev[k] != 0 and P[k, j] != 0:
                    acc = acc + prev[k] * P[k, j]
            new.append(acc)
        rows.append(new)
    return Matrix(rows)


def column_rescale(L: Matrix, s) -> Matrix:
    """Divide column ``k`` by ``s**k``; the division must be exact in the ring."""
    n, m = L.shape
    scale = [1]
    for _ in range(1, m):
        scale.append(scale[-1] * s)
    return Matrix.from_function(n, m, lambda i, k: exact_divide(L[i, k], scale[k]) if L[i, k] != 0 else 0)


def tridiagonal(diagonal, sub, sup, size: int, corner=None) -> Matrix:
    """Constant tridiagonal matrix, optionally with a different ``(0, 0)`` entry."""

    def entry(i, j):
        if i == j:
            return corner if (i == 0 and corner is not None) else diagonal
        if i == j + 1:
            return sub
        if j == i + 1:
            return sup
        return 0

    return Matrix.from_function(size, size, entry)


__all__ = [
    "RiordanPair",
    "NotRiordan",
    "riordan_entry",
    "riordan_mul",
    "riordan_inverse",
    "ftra_apply",
    "pascal",
    "ballot_m",
    "ballot_m_tilde",
    "production_matrix",
    "matrix_from_production",
    "column_rescale",
    "tridiagonal",
]
