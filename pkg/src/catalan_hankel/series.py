"""Truncated formal power series over an exact coefficient ring.

A :class:`PowerSeries` carries its truncation order explicitly: it knows the
coefficients of ``x**0 .. x**order`` and nothing beyond.  Binary operations
require equal orders; nothing is ever silently extended.

Coefficients may be ``int``, ``Fraction`` or :class:`~catalan_hankel.exact.BivarPoly`.
Division by a constant term goes through :func:`~catalan_hankel.exact.field_divide`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .exact import field_divide

Poly = Tuple  # univariate polynomial, coefficients low degree first


class OrderMismatch(ValueError):
    """Two series with different truncation orders were combined."""


class NoFit(ValueError):
    """No numerator of the requested degree reproduces the sequence."""

    def __init__(self, message, residual_index=None, residual=None):
        super().__init__(message)
        self.residual_index = residual_index
        self.residual = residual


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not len(coeffs):
            raise ValueError("a power series needs at least one coefficient")
        self.coeffs = tuple(coeffs)

    # -- construction -------------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int) -> "PowerSeries":
        """Series of an exact polynomial, padded or cut to ``order``."""
        c = list(coeffs[: order + 1])
        c.extend([0] * (order + 1 - len(c)))
        return cls(c)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.polynomial([1], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.polynomial([0, 1], order)

    @classmethod
    def geometric(cls, ratio, order: int) -> "PowerSeries":
        """``1/(1 - ratio*x)``."""
        out, p = [], 1
        for _ in range(order + 1):
            out.append(p)
            p = p * ratio
        return cls(out)

    # -- basics -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"PowerSeries([{body}])"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def _check(self, other: "PowerSeries"):
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def _lift(self, other):
        if isinstance(other, PowerSeries):
            self._check(other)
            return other
        return PowerSeries.polynomial([other], self.order)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        return PowerSeries([p + q for p, q in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs])
        self._check(other)
        n = self.order
        f, g = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                if f[i] and g[k - i]:
                    acc = acc + f[i] * g[k - i]
            out.append(acc)
        return PowerSeries(out)

    def __rmul__(self, other):
        return PowerSeries([other * c for c in self.coeffs])

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; needs an invertible constant term."""
        f = self.coeffs
        if f[0] == 0:
            raise ZeroDivisionError("power series with zero constant term is not invertible")
        g = [field_divide(1, f[0])]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if f[i]:
                    acc = acc + f[i] * g[k - i]
            g.append(field_divide(-acc, f[0]))
        return PowerSeries(g)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return PowerSeries([field_divide(c, other) for c in self.coeffs])

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus / composition ----------------------------------------------

    def derivative(self) -> "PowerSeries":
        """Formal derivative, of order ``order - 1``."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        result = PowerSeries.polynomial([self.coeffs[-1]], self.order)
        for c in reversed(self.coeffs[:-1]):
            result = result * inner + c
        return result

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return self.compose(inner)

    def revert(self) -> "PowerSeries":
        """Compositional inverse ``u`` with ``self(u) = x`` and ``u(0) = 0``.

        Newton iteration ``u <- u - (f(u) - x) / f'(u)``; each step doubles
        the number of correct coefficients.
        """
        f = self.coeffs
        if f[0] != 0:
            raise ValueError("reversion needs f(0) = 0")
        if self.order < 1 or f[1] == 0:
            raise ValueError("reversion needs an invertible linear coefficient")
        n = self.order
        x = PowerSeries.x(n)
        # the unknown x**n coefficient of f' only affects u beyond order n
        fprime = PowerSeries.polynomial(self.derivative().coeffs, n)
        u = PowerSeries.polynomial([0, field_divide(1, f[1])], n)
        correct = 2
        while True:
            residual = self.compose(u) - x
            if all(c == 0 for c in residual.coeffs):
                return u
            if correct > 2 * (n + 1):
                raise ArithmeticError("Newton reversion failed to converge")
            u = u - residual / fprime.compose(u)
            correct *= 2

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by ``x**k``; the first ``k`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise ValueError("not enough precision to divide by x^k")
        return PowerSeries(self.coeffs[k:])


# -- univariate polynomial helpers ----------------------------------------------


def poly_trim(p: Sequence) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Sequence, q: Sequence) -> Poly:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_pow(p: Sequence, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = poly_mul(out, p)
    return out


@dataclass(frozen=True)
class RationalGF:
    """Rational generating function ``numerator / denominator``."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ZeroDivisionError("denominator must have a nonzero constant term")

    def expand(self, n: int) -> PowerSeries:
        return rational_expand(self, n)


def rational_expand(gf: RationalGF, n: int) -> PowerSeries:
    """First ``n + 1`` Taylor coefficients of ``gf``, via its recurrence."""
    p, q = gf.numerator, gf.denominator
    if q[0] == 0:
        raise ZeroDivisionError("denominator constant term is zero")
    out = []
    for k in range(n + 1):
        acc = p[k] if k < len(p) else 0
        for j in range(1, min(k, len(q) - 1) + 1):
            if q[j]:
                acc = acc - q[j] * out[k - j]
        out.append(field_divide(acc, q[0]))
    return PowerSeries(out)


def fit_rational_gf(seq: PowerSeries, denominator: Sequence, max_degree: int) -> Poly:
    """Numerator ``p`` with ``deg p <= max_degree`` and ``p / denominator = seq``.

    The product ``seq * denominator`` is formed to the order of ``seq``; any
    nonzero coefficient above ``max_degree`` raises :class:`NoFit`.
    """
    if seq.order < max_degree:
        raise ValueError(f"need at least {max_degree + 1} terms, got {len(seq)}")
    prod = seq * PowerSeries.polynomial(list(denominator), seq.order)
    for k in range(max_degree + 1, seq.order + 1):
        if prod[k] != 0:
            raise NoFit(
                f"coefficient {k} of seq*denominator is {prod[k]}, not 0",
                residual_index=k,
                residual=prod[k],
            )
    return poly_trim(prod.coeffs[: max_degree + 1])


ps_mul = PowerSeries.__mul__
ps_inverse = PowerSeries.inverse
ps_compose = PowerSeries.compose
ps_revert = PowerSeries.revert
