"""Exact dense univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a positive
denominator).  A :class:`Poly` is immutable and always normalized: trailing
zero coefficients are stripped, and the zero polynomial is the empty tuple with
degree :data:`NEG_INF`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from numbers import Rational
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "NEG_INF",
    "Poly",
    "Scalar",
    "as_scalar",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "derivative",
    "reverse",
    "div_one_minus_x",
    "evaluate",
    "poly_divmod",
    "poly_gcd",
    "primitive_part",
    "content_free",
    "pseudo_remainder",
    "is_palindromic",
    "binomial_power",
    "format_poly",
    "GammaVector",
]

Scalar = Fraction

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

ScalarLike = Union[int, Fraction, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` to a Fraction.

    Floats are refused so no rounded value can leak into exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


class Poly:
    """Dense polynomial in ``x``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: ScalarLike = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: ScalarLike) -> "Poly":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        """Index of the last nonzero coefficient, or ``NEG_INF`` for zero."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other):
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _lift(other))

    def __rsub__(self, other):
        return poly_sub(_lift(other), self)

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        s = as_scalar(other)
        return Poly(c * s for c in self._coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, t: ScalarLike) -> Fraction:
        return evaluate(self, t)

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self._coeffs:
            return self
        return Poly([0] * k + list(self._coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(_fmt_scalar(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return format_poly(self)


def _lift(other) -> Poly:
    return other if isinstance(other, Poly) else Poly([other])


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "x") -> str:
    """Render as ``"c0 + c1*x + c2*x^2"``; zero coefficients are skipped."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = _fmt_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_scalar(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, -q)


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Poly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Poly(out)


def derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i)


def reverse(p: Poly, n: int) -> Poly:
    """Return ``x**n * p(1/x)``; requires ``n >= deg p``."""
    if n < p.degree:
        raise ValueError(f"reverse: n={n} is below deg p={p.degree}")
    cs = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p))
    return Poly(reversed(cs))


def div_one_minus_x(p: Poly) -> Poly:
    """Exact quotient ``p / (1 - x)`` by running prefix sums.

    Raises ValueError when ``p(1) != 0``.
    """
    if evaluate(p, 1) != 0:
        raise ValueError("div_one_minus_x: p(1) != 0, division is not exact")
    out, acc = [], Fraction(0)
    for c in p.coeffs[:-1]:
        acc += c
        out.append(acc)
    return Poly(out)


def evaluate(p: Poly, t: ScalarLike) -> Fraction:
    t = as_scalar(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def is_palindromic(p: Poly, n=None) -> bool:
    """True when ``p(x) == x**n p(1/x)``; ``n`` defaults to ``deg p``."""
    if p.is_zero():
        return True
    n = p.degree if n is None else n
    if n < p.degree:
        return False
    return reverse(p, n) == p


def binomial_power(n: int, shift: int = 0) -> Poly:
    """``x**shift * (1 + x)**n`` with integer binomial coefficients."""
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return Poly([0] * shift + row)


def poly_divmod(p: Poly, d: Poly):
    """Euclidean division over the rationals: ``p = d*q + r`` with ``deg r < deg d``."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    if len(r) - 1 < dd:
        return Poly(), p
    q = [Fraction(0)] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        coef = r[k] / lead
        q[k - dd] = coef
        if coef:
            for j, c in enumerate(dc):
                r[k - dd + j] -= coef * c
    return Poly(q), Poly(r[:dd])


def content_free(p: Poly) -> Poly:
    """Scale ``p`` by a positive rational to coprime integer coefficients."""
    if p.is_zero():
        return p
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _igcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = _igcd(g, v)
    return Poly(v // g for v in ints)


def primitive_part(p: Poly) -> Poly:
    """Coprime integer multiple of ``p`` with positive leading coefficient."""
    q = content_free(p)
    return -q if q.leading() < 0 else q


def pseudo_remainder(p: Poly, d: Poly) -> Poly:
    """``lc(d)**(deg p - deg d + 1) * p mod d``, computed fraction-free."""
    if d.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    if len(r) - 1 < dd:
        return p
    for k in range(len(r) - 1, dd - 1, -1):
        top = r[k]
        r = [c * lead for c in r]
        for j, c in enumerate(dc):
            r[k - dd + j] -= top * c
    return Poly(r[:dd])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a * (1 / a.leading())



@dataclass(frozen=True)
class GammaVector:
    """Coordinates in the basis ``x**k (1+x)**(center_degree - 2k)``."""

    entries: tuple
    center_degree: int

    def to_poly(self) -> Poly:
        out = Poly()
        for k, g in enumerate(self.entries):
            if g:
                out = out + binomial_power(self.center_degree - 2 * k, k) * g
        return out

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.entries)

    def first_negative(self):
        for k, g in enumerate(self.entries):
            if g < 0:
                return k
        return None
