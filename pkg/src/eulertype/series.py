"""Truncated power series in ``z`` whose coefficients are polynomials in ``x``."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .polycore import Poly, as_scalar

__all__ = ["SeriesZ"]


class SeriesZ:
    """``sum_j coeffs[j] z^j`` modulo ``z^(order+1)``; each coefficient is a :class:`Poly`."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Poly], order: int):
        cs = list(coeffs)[: order + 1]
        cs += [Poly()] * (order + 1 - len(cs))
        self.coeffs: List[Poly] = cs
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "SeriesZ":
        return cls([c if isinstance(c, Poly) else Poly([c])], order)

    def __getitem__(self, j: int) -> Poly:
        return self.coeffs[j]

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        self._check(other)
        return SeriesZ([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "SeriesZ") -> "SeriesZ":
        self._check(other)
        return SeriesZ([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other) -> "SeriesZ":
        if not isinstance(other, SeriesZ):
            s = other if isinstance(other, Poly) else Poly([as_scalar(other)])
            return SeriesZ([c * s for c in self.coeffs], self.order)
        self._check(other)
        out = [Poly()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return SeriesZ(out, self.order)

    __rmul__ = __mul__

    def _check(self, other: "SeriesZ"):
        if other.order != self.order:
            raise ValueError("series truncated at different orders")

    def derivative(self) -> "SeriesZ":
        return SeriesZ([self.coeffs[j] * j for j in range(1, self.order + 1)], self.order)

    def exp(self) -> "SeriesZ":
        """``exp(F)`` for ``F(0) = 0`` via ``n E_n = sum_k k F_k E_{n-k}``."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs a series with zero constant term")
        e = [Poly([1])]
        for n in range(1, self.order + 1):
            acc = Poly()
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * e[n - k] * k
            e.append(acc * Fraction(1, n))
        return SeriesZ(e, self.order)

    def log(self) -> "SeriesZ":
        """``log(D)`` for ``D(0) = 1``, from ``n L_n = n D_n - sum_{k<n} k L_k D_{n-k}``."""
        if self.coeffs[0] != Poly([1]):
            raise ValueError("log needs a series with constant term 1")
        lg = [Poly()]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] * n
            for k in range(1, n):
                if not lg[k].is_zero():
                    acc = acc - lg[k] * self.coeffs[n - k] * k
            lg.append(acc * Fraction(1, n))
        return SeriesZ(lg, self.order)

    def power(self, r) -> "SeriesZ":
        """``D^r = exp(r log D)`` for any rational ``r``; needs ``D(0) = 1``."""
        return (self.log() * as_scalar(r)).exp()

    def egf_values(self) -> List[Poly]:
        """``n! [z^n]`` for ``n = 0..order``."""
        out, fact = [], 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out
