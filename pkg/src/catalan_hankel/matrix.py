"""Dense exact matrices with the structure predicates the package needs."""

from __future__ import annotations

from typing import Callable, NamedTuple, Sequence, Tuple

from .exact import field_divide, render


class Bandwidth(NamedTuple):
    """Exact bandwidth with a witness entry ``(i, j)`` at distance ``width``."""

    width: int
    witness: Tuple[int, int] | None


class Matrix:
    """Immutable matrix of exact ring elements, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, fn: Callable[[int, int], object]) -> "Matrix":
        return cls([[fn(i, j) for j in range(n_cols)] for i in range(n_rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> "Matrix":
        return cls.from_function(n_rows, n_rows if n_cols is None else n_cols, lambda i, j: 0)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def size(self) -> int:
        n, m = self.shape
        if n != m:
            raise ValueError(f"matrix is not square: {n}x{m}")
        return n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def to_lists(self):
        return [list(r) for r in self.rows]

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(m)]
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = 0
                for x, y in zip(r, col):
                    if x != 0 and y != 0:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector."""
        if len(vector) != self.shape[1]:
            raise ValueError("vector length does not match column count")
        out = []
        for r in self.rows:
            acc = 0
            for x, y in zip(r, vector):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out.append(acc)
        return out

    @property
    def T(self) -> "Matrix":
        n, m = self.shape
        return Matrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def leading(self, k: int) -> "Matrix":
        """Top-left ``k x k`` block."""
        return Matrix([r[:k] for r in self.rows[:k]])

    def block(self, rows: slice, cols: slice) -> "Matrix":
        return Matrix([r[cols] for r in self.rows[rows]])

    # -- structure ----------------------------------------------------------

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def is_hankel(self) -> bool:
        n, m = self.shape
        return all(
            self.rows[i][j] == self.rows[i - 1][j + 1]
            for i in range(1, n)
            for j in range(m - 1)
        )

    def is_lower_triangular(self) -> bool:
        n, m = self.shape
        return all(self.rows[i][j] == 0 for i in range(n) for j in range(i + 1, m))

    def is_unit_lower_triangular(self) -> bool:
        return self.is_lower_triangular() and all(self.rows[i][i] == 1 for i in range(self.size))

    def is_hessenberg(self) -> bool:
        """Lower Hessenberg: zero above the superdiagonal."""
        n, m = self.shape
        return all(self.rows[i][j] == 0 for i in range(n) for j in range(i + 2, m))

    def bandwidth(self) -> Bandwidth:
        """Largest ``|i - j|`` with a nonzero entry, and one such entry."""
        best, witness = -1, None
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x != 0 and abs(i - j) > best:
                    best, witness = abs(i - j), (i, j)
        return Bandwidth(max(best, 0), witness)

    def render(self) -> str:
        cells = [[render(x) for x in r] for r in self.rows]
        if not cells:
            return ""
        widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
        return "\n".join(
            "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells
        )


def toeplitz_symmetric(bands: Sequence, size: int) -> Matrix:
    """Symmetric banded Toeplitz matrix; ``bands[d]`` sits at distance ``d``."""
    return Matrix.from_function(
        size, size, lambda i, j: bands[abs(i - j)] if abs(i - j) < len(bands) else 0
    )


def solve_lower(L: Matrix, rhs: Matrix) -> Matrix:
    """Solve ``L X = rhs`` for lower-triangular ``L`` by forward substitution.

    Divisions by the diagonal go through ``field_divide``: exact in Z[a, b],
    into Q for integer matrices with non-unit diagonal.
    """
    n = L.size
    if rhs.shape[0] != n:
        raise ValueError("right-hand side has the wrong number of rows")
    for i in range(n):
        if L[i, i] == 0:
            raise ZeroDivisionError(f"singular lower-triangular matrix (zero at {i},{i})")
    m = rhs.shape[1]
    X = [[0] * m for _ in range(n)]
    for j in range(m):
        for i in range(n):
            acc = rhs[i, j]
            for k in range(i):
                if L[i, k] != 0 and X[k][j] != 0:
                    acc = acc - L[i, k] * X[k][j]
            X[i][j] = field_divide(acc, L[i, i])
    return Matrix(X)


def inverse_lower(L: Matrix) -> Matrix:
    return solve_lower(L, Matrix.identity(L.size))
