"""Eulerian-type polynomial families generated by their recurrences.

Every family is an instance of the three-parameter recurrence

    f_{n+1}(x) = (a n x + b x + c) f_n(x) + a x (1 - x) f_n'(x),   f_0 = 1,

after a documented change of parameters (see :data:`FAMILY_TABLE`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Tuple

from .polycore import (
    GammaVector,
    Poly,
    as_scalar,
    derivative,
    div_one_minus_x,
    reverse,
)

__all__ = [
    "FAMILY_TABLE",
    "FamilyInfo",
    "FamilySpec",
    "SymDecomp",
    "GammaPair",
    "step_general",
    "step_by_derivative",
    "generate_abc",
    "generate",
    "sym_decomp",
    "sym_decomp_recurrence",
    "gamma_recurrence",
    "canonical_kind",
]


@dataclass(frozen=True)
class FamilyInfo:
    """How a named family maps onto the (a, b, c) recurrence.

    ``shifted`` families advance from index 1: position 0 holds 1 and position
    ``n >= 1`` holds ``first * f_{n-1}``.  Unshifted families hold
    ``first * f_n`` at position ``n``.
    """

    params: Tuple[str, ...]
    abc: Callable[[Mapping[str, Fraction]], Tuple[Fraction, Fraction, Fraction]]
    first: Callable[[Mapping[str, Fraction]], Fraction]
    shifted: bool
    aliases: Tuple[str, ...] = ()
    description: str = ""


_ONE = lambda P: Fraction(1)  # noqa: E731

FAMILY_TABLE: Dict[str, FamilyInfo] = {
    "general_abc": FamilyInfo(
        ("a", "b", "c"), lambda P: (P["a"], P["b"], P["c"]), _ONE, False,
        ("general", "abc"), "f_n(x) with f_0 = 1",
    ),
    "hcd_pqr": FamilyInfo(
        ("p", "q", "r"), lambda P: (P["q"], P["q"] * P["r"] - P["p"], P["p"]), _ONE, False,
        ("hcd",), "P_n(x) with (a, b, c) = (q, qr - p, p)",
    ),
    "q_eulerian": FamilyInfo(
        ("q",), lambda P: (Fraction(1), Fraction(1), P["q"]), lambda P: P["q"], True,
        (), "A_n(x, q) over (exc, cyc); A_1 = q",
    ),
    "li_shanlan": FamilyInfo(
        ("q",), lambda P: (Fraction(1), P["q"], Fraction(1)), lambda P: P["q"], False,
        (), "L_n(x, q) = x^n A_{n+1}(1/x, q); L_0 = q",
    ),
    "one_over_k": FamilyInfo(
        ("k",), lambda P: (P["k"], P["k"], Fraction(1)), _ONE, True,
        ("1/k", "onek"), "A_n^(k)(x); A_1 = 1",
    ),
    "type_b_q": FamilyInfo(
        ("q",), lambda P: (1 + P["q"], P["q"], Fraction(1)), _ONE, False,
        ("type_b", "typeb"), "B_n(x, q) over (des_B, neg)",
    ),
    "r_colored": FamilyInfo(
        ("r",), lambda P: (P["r"], P["r"] - 1, Fraction(1)), _ONE, False,
        (), "A_{n,r}(x)",
    ),
    "carlitz_scoville": FamilyInfo(
        ("p", "q"), lambda P: (Fraction(1), P["p"], P["q"]), _ONE, False,
        ("carlitz",), "P_n(x; p, q)",
    ),
}


def _norm(name: str) -> str:
    return name.strip().lower().replace("-", "_")


_ALIASES = {
    _norm(alias): kind for kind, info in FAMILY_TABLE.items() for alias in (kind,) + info.aliases
}


def canonical_kind(name: str) -> str:
    try:
        return _ALIASES[_norm(name)]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        kind = canonical_kind(self.kind)
        info = FAMILY_TABLE[kind]
        params = {k: as_scalar(v) for k, v in dict(self.params).items()}
        if set(params) != set(info.params):
            raise ValueError(
                f"{kind} needs parameters {sorted(info.params)}, got {sorted(params)}"
            )
        for name, v in params.items():
            if v < 0:
                raise ValueError(f"parameter {name}={v} must be nonnegative")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", params)

    @property
    def info(self) -> FamilyInfo:
        return FAMILY_TABLE[self.kind]

    def abc(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.info.abc(self.params)

    def coefficients_nonnegative(self) -> bool:
        """False when the mapped (a, b, c) has a negative entry (hcd_pqr with qr < p)."""
        return all(v >= 0 for v in self.abc())

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.params.items()))))


@dataclass(frozen=True)
class SymDecomp:
    """``f = a_part + x * b_part``; ``a_part`` is symmetric about ``degree/2``
    and ``b_part`` about ``(degree - 1)/2``."""

    a_part: Poly
    b_part: Poly
    degree: int

    def reconstruct(self) -> Poly:
        return self.a_part + self.b_part.shift(1)


@dataclass(frozen=True)
class GammaPair:
    alpha: GammaVector
    beta: GammaVector


def step_general(a, b, c, f: Poly, n: int) -> Poly:
    """One step of the (a, b, c) recurrence, coefficientwise:

    f_{n+1,i} = (a i + c) f_{n,i} + (a (n - i) + a + b) f_{n,i-1}.
    """
    if f.degree > n:
        raise ValueError(f"step_general: deg f = {f.degree} exceeds n = {n}")
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    out = []
    for i in range(n + 2):
        out.append((a * i + c) * f[i] + (a * (n - i) + a + b) * f[i - 1] if i else c * f[0])
    return Poly(out)


def step_by_derivative(a, b, c, f: Poly, n: int) -> Poly:
    """Same step written with the derivative, ``(anx+bx+c) f + a x (1-x) f'``."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    return Poly([c, a * n + b]) * f + Poly([0, a, -a]) * derivative(f)


def generate_abc(a, b, c, n_max: int, first=1) -> List[Poly]:
    f = Poly([first])
    out = [f]
    for n in range(n_max):
        f = step_general(a, b, c, f, n)
        out.append(f)
    return out


def generate(spec: FamilySpec, n_max: int) -> List[Poly]:
    """Polynomials at indices ``0..n_max``; position ``n`` is the family's index ``n``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a, b, c = spec.abc()
    first = spec.info.first(spec.params)
    if spec.info.shifted:
        if n_max == 0:
            return [Poly([1])]
        return [Poly([1])] + generate_abc(a, b, c, n_max - 1, first)
    return generate_abc(a, b, c, n_max, first)


def sym_decomp(f: Poly, n=None) -> SymDecomp:
    """Symmetric decomposition ``f = a + x b`` taken about nominal degree ``n``.

    ``n`` defaults to ``deg f``; a larger ``n`` is allowed (e.g. a recurrence
    member whose leading coefficient vanished).
    """
    if f.is_zero():
        return SymDecomp(Poly(), Poly(), 0 if n is None else n)
    n = f.degree if n is None else n
    g = reverse(f, n)
    a_part = div_one_minus_x(f - g.shift(1))
    b_part = div_one_minus_x(g - f)
    d = SymDecomp(a_part, b_part, n)
    assert d.reconstruct() == f
    return d


def sym_decomp_recurrence(a, b, c, n_max: int) -> List[SymDecomp]:
    """Run the coupled recurrence for ``(a_n, b_n)`` from ``a_0 = 1, b_0 = 0``."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    ap, bp = Poly([1]), Poly()
    out = [SymDecomp(ap, bp, 0)]
    xdx = Poly([0, a, -a])
    for n in range(n_max):
        ap, bp = (
            Poly([c, a * n + c]) * ap + xdx * derivative(ap) + bp.shift(1) * (a - b + c),
            Poly([b, a * n - a + b]) * bp + xdx * derivative(bp) + ap * (b - c),
        )
        out.append(SymDecomp(ap, bp, n + 1))
    return out


def gamma_recurrence(a, b, c, n_max: int) -> List[GammaPair]:
    """Gamma coordinates of ``(a_n, b_n)`` by their direct recurrence.

    ``alpha`` has length ``n//2 + 1`` (center ``n``); ``beta`` has length
    ``(n-1)//2 + 1`` (center ``n - 1``) and is empty at ``n = 0``.
    """
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    zero = Fraction(0)
    alpha, beta = [Fraction(1)], []
    out = [GammaPair(GammaVector(tuple(alpha), 0), GammaVector((), -1))]

    def at(v, k):
        return v[k] if 0 <= k < len(v) else zero

    for n in range(n_max):
        m = n + 1
        new_alpha = [
            (a * k + c) * at(alpha, k)
            + 2 * a * (n - 2 * k + 2) * at(alpha, k - 1)
            + (a - b + c) * at(beta, k - 1)
            for k in range(m // 2 + 1)
        ]
        new_beta = [
            (a * k + b) * at(beta, k)
            + 2 * a * (n - 2 * k + 1) * at(beta, k - 1)
            + (b - c) * at(alpha, k)
            for k in range((m - 1) // 2 + 1)
        ]
        alpha, beta = new_alpha, new_beta
        out.append(GammaPair(GammaVector(tuple(alpha), m), GammaVector(tuple(beta), m - 1)))
    return out
