"""Jacobi continued fractions of moment sequences.

A J-fraction is ``1/(1 - alpha_0 x - beta_1 x^2/(1 - alpha_1 x - beta_2 x^2/(...)))``.
Coefficients are peeled off a normalized series level by level; each level
consumes two orders of precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .catalan import combo_seq
from .exact import field_divide
from .hankel import hankel_transform, principal_minors
from .matrix import Matrix
from .report import ConjectureReport
from .series import PowerSeries


class ZeroLeadingTerm(ValueError):
    pass


class InsufficientPrecision(ValueError):
    pass


@dataclass(frozen=True)
class JFraction:
    alphas: Tuple = ()
    betas: Tuple = ()
    terminated: bool = False  # a zero beta stopped the peeling early
    scale: object = 1  # leading term divided out before peeling

    @property
    def depth(self) -> int:
        return len(self.alphas)


def jfraction_extract(seq: Sequence, depth: int) -> JFraction:
    """Peel ``depth`` levels off ``seq / seq[0]``.

    Returns ``alphas[0:depth]`` and the ``depth - 1`` betas between them.
    Needs at least ``2 * depth + 1`` terms.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if len(seq) < 2 * depth + 1:
        raise InsufficientPrecision(f"depth {depth} needs {2 * depth + 1} terms, got {len(seq)}")
    if seq[0] == 0:
        raise ZeroLeadingTerm("sequence must start with a nonzero term")
    s0 = seq[0]
    if depth == 0:
        return JFraction(scale=s0)
    u = PowerSeries([field_divide(s, s0) for s in seq[: 2 * depth + 1]])
    alphas: List = []
    betas: List = []
    for level in range(depth):
        t = 1 - u.inverse()
        alpha = t[1]
        alphas.append(alpha)
        if level == depth - 1:
            break
        rest = t - PowerSeries.polynomial([0, alpha], t.order)
        beta = rest[2]
        if beta == 0:
            return JFraction(tuple(alphas), tuple(betas), True, s0)
        betas.append(beta)
        u = rest.shift_down(2) / beta
    return JFraction(tuple(alphas), tuple(betas), False, s0)


def jfraction_series(jf: JFraction, order: int) -> PowerSeries:
    """Expand the (normalized) finite J-fraction to ``order``."""
    if not jf.alphas:
        return PowerSeries.one(order)
    x = PowerSeries.x(order)
    tail = PowerSeries.polynomial([0], order)
    for k in range(jf.depth - 1, -1, -1):
        beta_next = jf.betas[k] if k < len(jf.betas) else 0
        denom = 1 - x * jf.alphas[k] - x * x * beta_next * tail
        tail = denom.inverse()
    return tail


def tridiag_from_jfraction(jf: JFraction, size: int) -> Matrix:
    """Diagonal ``alpha``, subdiagonal ``beta``, superdiagonal 1."""
    if size > jf.depth:
        raise InsufficientPrecision(f"J-fraction has depth {jf.depth}, size {size} requested")

    def entry(i, j):
        if i == j:
            return jf.alphas[i]
        if i == j + 1:
            return jf.betas[j]
        if j == i + 1:
            return 1
        return 0

    return Matrix.from_function(size, size, entry)


def ratio_check(m: int, a, b, n_max: int) -> ConjectureReport:
    """Minors of the J-fraction matrix of ``combo(m, a, b)`` against the
    ratios of the Hankel transforms of shifts ``m + 1`` and ``m``."""
    report = ConjectureReport("ratio", {"m": m, "a": a, "b": b, "n_max": n_max})
    depth = n_max + 1
    seq = combo_seq(m, a, b, 2 * depth)
    h_lo = hankel_transform(combo_seq(m, a, b, 2 * n_max), n_max)
    h_hi = hankel_transform(combo_seq(m + 1, a, b, 2 * n_max), n_max)
    if seq[0] == 0:
        report.notes.append("degenerate: zero leading term, case skipped")
        return report
    jf = jfraction_extract(seq, depth)
    usable = jf.depth
    if jf.terminated:
        report.notes.append(f"degenerate: peeling stopped at depth {jf.depth}")
    minors = principal_minors(tridiag_from_jfraction(jf, usable)) if usable else []
    for n in range(min(usable, n_max + 1)):
        if h_lo[n] == 0:
            report.notes.append(f"degenerate: h_{n} of shift {m} is zero, n={n} skipped")
            continue
        report.add(f"m={m} a={a} b={b} n={n}", field_divide(Fraction(h_hi[n]), h_lo[n]), minors[n])
    return report
