"""Catalan sequence families, their closed forms, and the banded decomposition.

``combo(m, a, b)`` is the sequence ``a*C(n+m) + b*C(n+m+1)``.  Passing the
symbols :data:`~catalan_hankel.exact.A` and :data:`~catalan_hankel.exact.B`
for ``a`` and ``b`` produces it over Z[a, b]; Hankel determinants of the
symbolic sequence are then polynomial identities, not numeric samples.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .exact import A, B, BivarPoly
from .hankel import conjugate_and_bands, hankel_matrix, hankel_transform
from .matrix import Matrix, toeplitz_symmetric
from .report import ConjectureReport
from .riordan import ballot_m, ballot_m_tilde


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 for ``k < 0``; negative ``n`` by the usual extension."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_seq(n_max: int) -> List[int]:
    return [catalan_number(n) for n in range(n_max + 1)]


def shifted_catalan_seq(m: int, n_max: int) -> List[int]:
    return [catalan_number(n + m) for n in range(n_max + 1)]


def combo_seq(m: int, a, b, n_max: int) -> list:
    """``a*C(n+m) + b*C(n+m+1)`` for ``n = 0 .. n_max``."""
    out = []
    for n in range(n_max + 1):
        out.append(a * catalan_number(n + m) + b * catalan_number(n + m + 1))
    return out


FAMILIES = ("catalan", "shifted", "combo", "explicit")


@dataclass(frozen=True)
class SequenceSpec:
    """Which sequence to generate.

    ``family`` is one of ``catalan``, ``shifted`` (``C(n+m)``), ``combo``
    (``a*C(n+m) + b*C(n+m+1)``) or ``explicit`` (fixed ``values``).
    """

    family: str = "catalan"
    m: int = 0
    a: object = 1
    b: object = 1
    values: Optional[Tuple] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "explicit" and self.values is None:
            raise ValueError("explicit family needs values")

    @property
    def symbolic(self) -> bool:
        return isinstance(self.a, BivarPoly) or isinstance(self.b, BivarPoly)

    def terms(self, n_max: int) -> list:
        if self.family == "catalan":
            return catalan_seq(n_max)
        if self.family == "shifted":
            return shifted_catalan_seq(self.m, n_max)
        if self.family == "combo":
            return combo_seq(self.m, self.a, self.b, n_max)
        if len(self.values) < n_max + 1:
            raise ValueError(f"explicit sequence has {len(self.values)} terms, {n_max + 1} needed")
        return list(self.values[: n_max + 1])


def read_bfile(path) -> SequenceSpec:
    """Read an OEIS b-file (``index value`` per line, ``#`` comments)."""
    values = []
    expected = None
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'index value', got {line!r}")
        index, value = int(parts[0]), int(parts[1])
        if expected is not None and index != expected:
            raise ValueError(f"{path}:{lineno}: index {index} breaks the run (expected {expected})")
        expected = index + 1
        values.append(value)
    if not values:
        raise ValueError(f"{path}: no terms")
    return SequenceSpec("explicit", values=tuple(values))


# -- closed forms --------------------------------------------------------------


def _as_integer(x: Fraction, what: str) -> Fraction:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} = {x} is not an integer")
    return x


def eqE1_product(n: int, k: int) -> Fraction:
    """Product formula for the Hankel transform of ``C(n+k)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    value = Fraction(1)
    for i in range(1, k):
        for j in range(1, i + 1):
            value *= Fraction(2 * n + 2 + i + j, i + j)
    return _as_integer(value, f"E1({n},{k})")


def T_formula(n: int, k: int, m: int) -> Fraction:
    """Conjectured coefficient of ``b^(n-k+1) a^k`` for the ``m``-th triangle.

    Empty products are 1, ``C(x, y) = 0`` for ``y < 0``.  Raises
    ``ZeroDivisionError`` naming the vanishing factor.
    """
    if m < 2:
        raise ValueError("the product formula is only stated for m >= 2")
    half = (m - 1) // 2
    num = Fraction(catalan_number(m) * binom(m + k - 2, m - 2) * binom(n + k + 2 * m - 2, 2 * k + 2 * m - 3))
    den = Fraction(binom(2 * m - 2, 2 * m - 3))
    for j in range(half):
        num *= binom(2 * n + 2 * m - 2 * j - 1, 2 * m - 4 * j - 5)
        f = binom(2 * m - 2 * j - 1, 2 * m - 4 * j - 5)
        if f == 0:
            raise ZeroDivisionError(f"C({2 * m - 2 * j - 1}, {2 * m - 4 * j - 5}) = 0 in the denominator")
        den *= f
    for j in range(m - 2):
        num *= 2 * m - j - 2
        f = n + k + 2 * m - j - 2
        if f == 0:
            raise ZeroDivisionError(f"factor n+k+2m-j-2 vanishes at j={j}")
        den *= f
    if den == 0:
        raise ZeroDivisionError("C(2m-2, 2m-3) = 0 in the denominator")
    return _as_integer(num / den, f"T({n},{k},{m})")


def T_matrix(m: int, rows: int) -> Matrix:
    """The ``rows x rows`` truncation of ``(T(n, k, m))``; zero beyond ``k = n+1``."""
    return Matrix.from_function(
        rows, rows, lambda n, k: int(T_formula(n, k, m)) if k <= n + 1 else 0
    )


def conjecture_sum(n: int, m: int) -> BivarPoly:
    """``sum_k T(n, k, m) b^(n-k+1) a^k`` as a polynomial."""
    return BivarPoly({(k, n - k + 1): int(T_formula(n, k, m)) for k in range(n + 2)})


def prop_sum(shift: int, n: int) -> BivarPoly:
    """Binomial-sum closed forms known for shifts 0, 1 and 2."""
    terms = {}
    for k in range(n + 2):
        if shift == 0:
            c = Fraction(binom(n + k + 1, 2 * k))
        elif shift == 1:
            c = Fraction(binom(n + k + 2, 2 * k + 1))
        elif shift == 2:
            c = Fraction(2 * n + 5, n + k + 4) * binom(n + k + 4, n - k + 1) * (k + 1)
        else:
            raise ValueError("binomial-sum closed forms exist for shifts 0, 1, 2 only")
        terms[(k, n - k + 1)] = int(_as_integer(c, f"prop({shift},{n},{k})"))
    return BivarPoly(terms)


# -- symbolic Hankel transforms -------------------------------------------------


@lru_cache(maxsize=None)
def hankel_polys(m: int, n_max: int) -> Tuple[BivarPoly, ...]:
    """Symbolic Hankel transform of ``a*C(n+m) + b*C(n+m+1)``, ``n = 0 .. n_max``."""
    seq = combo_seq(m, A, B, 2 * n_max)
    return tuple(hankel_transform(seq, n_max))


def hankel_poly(m: int, n: int) -> BivarPoly:
    return hankel_polys(m, n)[n]


def symbolic_hankel(shift: int, size: int, a=A, b=B) -> Matrix:
    return hankel_matrix(combo_seq(shift, a, b, 2 * size - 2), size - 1)


def conjugated_hankel(shift: int, size: int, a=A, b=B, transform: str = "auto"):
    """Conjugate the Hankel matrix of ``combo(shift, a, b)`` into banded form.

    ``transform`` is ``"M"``, ``"Mtilde"`` or ``"auto"`` (``M`` for shift 0,
    ``Mtilde`` otherwise).  Returns ``(matrix, bandwidth)``.
    """
    if transform == "auto":
        transform = "M" if shift == 0 else "Mtilde"
    pair = ballot_m(size - 1) if transform == "M" else ballot_m_tilde(size - 1)
    return conjugate_and_bands(pair.matrix(size), symbolic_hankel(shift, size, a, b))


# -- spine decomposition ------------------------------------------------------------


def spine_entry(n: int, m: int, a=A, b=B):
    """``a*C(2m, n-1) + b*C(2m+2, n)``."""
    return a * binom(2 * m, n - 1) + b * binom(2 * m + 2, n)


def spine_bands(r: int, a=A, b=B) -> list:
    """Band values at distances ``0 .. r`` for shift ``r`` (spine column ``r - 1``)."""
    if r < 1:
        raise ValueError("spine is defined for shifts r >= 1")
    return [spine_entry(r - d, r - 1, a, b) for d in range(r + 1)]


def spine_toeplitz(r: int, size: int, a=A, b=B) -> Matrix:
    return toeplitz_symmetric(spine_bands(r, a, b), size)


def residual_seq(r: int, a=A, b=B) -> list:
    """Finite sequence ``u`` with ``spine_toeplitz(r) - Mt H(r) Mt^t = Hankel(u)``.

    ``u_n = a*C(2r-2, r-3-n) + b*C(2r, r-2-n)``; returned without trailing zeros.
    """
    if r < 1:
        raise ValueError("residual is defined for shifts r >= 1")
    out = [a * binom(2 * r - 2, r - 3 - n) + b * binom(2 * r, r - 2 - n) for n in range(max(r - 1, 0))]
    while out and out[-1] == 0:
        out.pop()
    return out


def residual_array_row(row: int, a=A, b=B) -> list:
    """Row ``row`` of the residual array as displayed: ``a*C(2r, r-2-n) + b*C(2r+2, r-1-n)``."""
    return [a * binom(2 * row, row - 2 - n) + b * binom(2 * row + 2, row - 1 - n) for n in range(row + 1)]


def finite_hankel(u: Sequence, size: int) -> Matrix:
    padded = list(u) + [0] * max(0, 2 * size - 1 - len(u))
    return Matrix.from_function(size, size, lambda i, j: padded[i + j])


# -- conjecture verification ----------------------------------------------------


def _t_case(args):
    m, n = args
    shift = m - 1
    return m, n, hankel_poly(shift, n), conjecture_sum(n, m)


def verify_T(m_max: int, n_max: int, workers: int = 1) -> ConjectureReport:
    """Check the product-formula conjecture coefficientwise in Z[a, b].

    The triangle ``T(., ., m)`` is compared with the Hankel transform of
    ``a*C(n+m-1) + b*C(n+m)``: its first column ``T(n, 0, m)`` is the
    transform of ``C(n+m)``, which is the ``a = 0`` specialization of that
    shift and not of ``a*C(n+m) + b*C(n+m+1)``.
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    report = ConjectureReport("conjecture-T", {"m_max": m_max, "n_max": n_max})
    grid = [(m, n) for m in range(2, m_max + 1) for n in range(n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_t_case, grid))
    else:
        results = [_t_case(g) for g in grid]
    for m, n, actual, predicted in results:
        report.add(f"m={m} n={n}: det Hankel(a C(n+{m - 1}) + b C(n+{m}))", actual, predicted)
    report.notes.append("triangle m is matched against shift m-1 (the literal shift-m reading fails; see readings)")
    return report


def verify_T_columns(m_max: int, n_max: int) -> ConjectureReport:
    """First-column checks of the triangles: the E1 product and the column shift."""
    report = ConjectureReport("conjecture-T-columns", {"m_max": m_max, "n_max": n_max})
    for m in range(2, m_max + 1):
        for n in range(n_max + 1):
            report.add(f"T({n},0,{m}) = E1({n},{m})", eqE1_product(n, m), T_formula(n, 0, m))
            if m < m_max:
                report.add(f"T({n},0,{m}) = T({n},{n + 1},{m + 1})", T_formula(n, 0, m), T_formula(n, n + 1, m + 1))
    return report
