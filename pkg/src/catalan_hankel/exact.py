"""Exact scalar arithmetic and the bivariate polynomial ring Z[a, b].

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`
(always normalized, positive denominator).  :class:`BivarPoly` is a sparse
polynomial in the two symbols ``a`` and ``b`` with integer coefficients.

The functions :func:`exact_divide` and :func:`field_divide` give every
coefficient domain used in this package a common division interface, so
matrix and series code can be written once and run over Z, Q and Z[a, b].
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Exponent = Tuple[int, int]


class InexactDivision(ArithmeticError):
    """Raised when a division does not stay inside the coefficient ring."""


class BivarPoly:
    """Polynomial in ``a`` and ``b`` with integer coefficients.

    Stored as a mapping ``(i, j) -> coeff`` for the monomial ``a**i * b**j``.
    Zero coefficients are never stored and instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], Iterable] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: Dict[Exponent, int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = int(c)
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self._terms = clean
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, x) -> "BivarPoly":
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls.constant(x.numerator)
        raise TypeError(f"cannot coerce {x!r} to a polynomial over Z")

    @classmethod
    def _raw(cls, terms: Dict[Exponent, int]) -> "BivarPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {i + j for i, j in self._terms}
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return degree is None or degrees.pop() == degree

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def leading_term(self) -> Tuple[Exponent, int]:
        """Largest monomial in lex order with ``a > b``."""
        e = max(self._terms)
        return e, self._terms[e]

    def sorted_terms(self):
        """Terms in canonical order: a-degree descending, then b-degree."""
        return sorted(self._terms.items(), key=lambda t: (-t[0][0], -t[0][1]))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return BivarPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = BivarPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_divide(self, other) -> "BivarPoly":
        """Quotient ``self / other`` when it lies in Z[a, b].

        Uses multivariate division by leading terms (lex order).  Raises
        :class:`InexactDivision` if there is a nonzero remainder.
        """
        d = BivarPoly.coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(d._terms) == 1:
            ((di, dj), dc), = d._terms.items()
            out = {}
            for (i, j), c in self._terms.items():
                q, rem = divmod(c, dc)
                if rem or i < di or j < dj:
                    raise InexactDivision(f"{self} is not divisible by {d}")
                out[(i - di, j - dj)] = q
            return BivarPoly._raw(out)
        (di, dj), dc = d.leading_term()
        rem = dict(self._terms)
        quot: Dict[Exponent, int] = {}
        while rem:
            (i, j) = max(rem)
            c = rem[(i, j)]
            q, r = divmod(c, dc)
            if r or i < di or j < dj:
                raise InexactDivision(f"{self} is not divisible by {d}")
            e = (i - di, j - dj)
            quot[e] = q
            for (ti, tj), tc in d._terms.items():
                key = (ti + e[0], tj + e[1])
                v = rem.get(key, 0) - q * tc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return BivarPoly._raw(quot)

    def __truediv__(self, other):
        return self.exact_divide(other)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, va, vb):
        return poly_eval(self, va, vb)

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            if other.denominator != 1:
                return False
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): int(other)}
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif list(self._terms) == [(0, 0)]:
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- printing -----------------------------------------------------------

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"BivarPoly({render_poly(self)!r})"


A = BivarPoly({(1, 0): 1})
B = BivarPoly({(0, 1): 1})


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("b" if j == 1 else f"b^{j}")
    return "*".join(parts)


def render_poly(p: BivarPoly) -> str:
    """Canonical text form, e.g. ``a^2 + 4*a*b + 4*b^2``."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    out = []
    for idx, ((i, j), c) in enumerate(terms):
        mono = _monomial(i, j)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def render(x) -> str:
    """Text form of any scalar used in the package."""
    if isinstance(x, BivarPoly):
        return render_poly(x)
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def poly_mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return BivarPoly.coerce(p) * q


def poly_eval(p: BivarPoly, va, vb):
    """Evaluate ``p`` exactly at ``a = va``, ``b = vb``."""
    va, vb = Fraction(va), Fraction(vb)
    total = Fraction(0)
    for (i, j), c in BivarPoly.coerce(p)._terms.items():
        total += c * va**i * vb**j
    return _demote(total)


def _demote(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def exact_divide(x, y):
    """Divide ``x`` by ``y`` inside their ring.

    Integers must divide exactly (``InexactDivision`` otherwise); rationals
    divide as a field; polynomials use :meth:`BivarPoly.exact_divide`.
    """
    if isinstance(x, BivarPoly) or isinstance(y, BivarPoly):
        return BivarPoly.coerce(x).exact_divide(y)
    if y == 0:
        raise ZeroDivisionError("exact_divide by zero")
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        if r:
            raise InexactDivision(f"{x} is not divisible by {y}")
        return q
    return Fraction(x) / Fraction(y)


def field_divide(x, y):
    """Divide in the fraction field where one is available.

    Integers pass to Q (results with denominator 1 come back as ``int``);
    there is no fraction field for Z[a, b], so polynomials must divide
    exactly.
    """
    if isinstance(x, BivarPoly) or isinstance(y, BivarPoly):
        return exact_divide(x, y)
    if y == 0:
        raise ZeroDivisionError("field_divide by zero")
    return _demote(Fraction(x) / Fraction(y))


def parse_scalar(text: str):
    """Parse ``"7"``, ``"-3/4"`` or ``"a"``/``"b"`` into a scalar."""
    text = text.strip()
    if text == "a":
        return A
    if text == "b":
        return B
    return _demote(Fraction(text))
