"""Certifiers for coefficient-sequence properties.

Every inequality is checked by exact cross-multiplication.  A failing report
carries a :class:`Witness` naming the first violated inequality ``left <= right``
as products of coefficients, so it can be replayed against the polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .families import sym_decomp
from .polycore import (
    GammaVector,
    Poly,
    binomial_power,
    content_free,
    derivative,
    evaluate,
    is_palindromic,
    poly_divmod,
    poly_gcd,
    pseudo_remainder,
)

__all__ = [
    "HOLDS",
    "FAILS",
    "NOT_APPLICABLE",
    "Witness",
    "PropertyReport",
    "GammaVector",
    "unimodal",
    "log_concave",
    "spiral",
    "alternatingly_increasing",
    "ratio_monotone",
    "ratio_chains",
    "gamma_vector",
    "bi_gamma",
    "darroch_bounds",
    "sturm_chain",
    "sturm_real_nonpositive",
    "replay",
    "PROPERTIES",
]

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Witness:
    """The inequality ``prod(a[i] for i in lhs) <= prod(a[j] for j in rhs)``
    that failed, with both sides evaluated (so ``left > right``).

    ``indices`` is the human-facing location (e.g. the valley triple for
    unimodality); ``chain`` names the chain or part the link belongs to.
    """

    indices: Tuple[int, ...]
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]
    left: Fraction
    right: Fraction
    chain: str = ""

    def is_violation(self) -> bool:
        return self.left > self.right


@dataclass
class PropertyReport:
    property: str
    verdict: str
    witness: Optional[Witness] = None
    modes: Optional[Tuple[int, ...]] = None
    reason: str = ""
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def __bool__(self) -> bool:
        return self.holds


def _prod(coeffs: Sequence[Fraction], idx: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for i in idx:
        out *= coeffs[i]
    return out


def _link(coeffs, lhs, rhs, indices=None, chain=""):
    """Return a Witness if ``prod(lhs) <= prod(rhs)`` fails, else None."""
    left, right = _prod(coeffs, lhs), _prod(coeffs, rhs)
    if left > right:
        return Witness(tuple(indices if indices is not None else lhs + rhs),
                       tuple(lhs), tuple(rhs), left, right, chain)
    return None


def _needs_nonnegative(name: str, p: Poly) -> Optional[PropertyReport]:
    if p.is_zero():
        return PropertyReport(name, NOT_APPLICABLE, reason="zero polynomial")
    neg = [i for i, c in enumerate(p.coeffs) if c < 0]
    if neg:
        return PropertyReport(name, NOT_APPLICABLE,
                              reason=f"negative coefficient at index {neg[0]}")
    return None


def unimodal(p: Poly) -> PropertyReport:
    bad = _needs_nonnegative("unimodal", p)
    if bad:
        return bad
    cs = p.coeffs
    top = max(cs)
    modes = tuple(i for i, c in enumerate(cs) if c == top)
    peak = 0
    descending = False
    for j in range(len(cs) - 1):
        if cs[j + 1] > cs[j]:
            if descending:
                w = Witness((peak, j, j + 1), (j + 1,), (j,), cs[j + 1], cs[j], "rise after fall")
                return PropertyReport("unimodal", FAILS, w, modes)
            peak = j + 1
        elif cs[j + 1] < cs[j]:
            descending = True
    return PropertyReport("unimodal", HOLDS, modes=modes)


def log_concave(p: Poly) -> PropertyReport:
    bad = _needs_nonnegative("log_concave", p)
    if bad:
        return bad
    cs = p.coeffs
    for i in range(1, len(cs) - 1):
        w = _link(cs, (i - 1, i + 1), (i, i), indices=(i,))
        if w:
            return PropertyReport("log_concave", FAILS, w)
    return PropertyReport("log_concave", HOLDS)


def _interleaved(n: int, start_high: bool) -> List[int]:
    lo, hi = 0, n
    order = []
    take_high = start_high
    while lo <= hi:
        if take_high:
            order.append(hi)
            hi -= 1
        else:
            order.append(lo)
            lo += 1
        take_high = not take_high
    return order


def _chain_report(name: str, p: Poly, order: List[int]) -> PropertyReport:
    bad = _needs_nonnegative(name, p)
    if bad:
        return bad
    cs = p.coeffs
    for u, v in zip(order, order[1:]):
        w = _link(cs, (u,), (v,), chain=name)
        if w:
            return PropertyReport(name, FAILS, w, details={"chain": order})
    return PropertyReport(name, HOLDS, details={"chain": order})


def spiral(p: Poly) -> PropertyReport:
    """a_n <= a_0 <= a_{n-1} <= a_1 <= ... <= a_{n//2}."""
    return _chain_report("spiral", p, _interleaved(max(p.degree, 0), True))


def alternatingly_increasing(p: Poly) -> PropertyReport:
    """a_0 <= a_n <= a_1 <= a_{n-1} <= ... <= a_{(n+1)//2}."""
    return _chain_report("alternatingly_increasing", p, _interleaved(max(p.degree, 0), False))


def ratio_chains(n: int) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Index pairs (numerator, denominator) of the two ratio chains at degree ``n``.

    Chain 1 is ``a_{n-i}/a_i`` for ``0 <= i <= (n-1)//2``; chain 2 is
    ``a_j/a_{n-1-j}`` for ``0 <= j <= n//2 - 1``.  Each chain must be
    nondecreasing with its last ratio at most 1.
    """
    chain1 = [(n - i, i) for i in range((n - 1) // 2 + 1)] if n >= 1 else []
    chain2 = [(j, n - 1 - j) for j in range(n // 2)]
    return chain1, chain2


def ratio_monotone(p: Poly) -> PropertyReport:
    if p.is_zero():
        return PropertyReport("ratio_monotone", NOT_APPLICABLE, reason="zero polynomial")
    cs = p.coeffs
    nonpos = [i for i, c in enumerate(cs) if c <= 0]
    if nonpos:
        return PropertyReport("ratio_monotone", NOT_APPLICABLE,
                              reason=f"coefficient at index {nonpos[0]} is not positive")
    n = p.degree
    for label, chain in zip(("chain1", "chain2"), ratio_chains(n)):
        for (u1, d1), (u2, d2) in zip(chain, chain[1:]):
            # u1/d1 <= u2/d2
            w = _link(cs, (u1, d2), (u2, d1), indices=(u1, d1, u2, d2), chain=label)
            if w:
                return PropertyReport("ratio_monotone", FAILS, w)
        if chain:
            u, d = chain[-1]
            w = _link(cs, (u,), (d,), indices=(u, d), chain=label)
            if w:
                return PropertyReport("ratio_monotone", FAILS, w)
    return PropertyReport("ratio_monotone", HOLDS)


def gamma_vector(p: Poly, n: Optional[int] = None) -> GammaVector:
    """Coordinates of ``p`` in the basis ``x^k (1+x)^(n-2k)``, ``0 <= k <= n//2``.

    ``n`` defaults to ``deg p``.  Raises ValueError unless ``p`` is symmetric
    about ``n/2``.
    """
    if n is None:
        n = p.degree if not p.is_zero() else 0
    if n < 0:
        if not p.is_zero():
            raise ValueError("gamma_vector: nonzero polynomial with negative center degree")
        return GammaVector((), n)
    if not is_palindromic(p, n):
        raise ValueError(f"gamma_vector: polynomial is not palindromic about degree {n}")
    residual = p
    entries = []
    for k in range(n // 2 + 1):
        g = residual[k]
        entries.append(g)
        if g:
            residual = residual - binomial_power(n - 2 * k, k) * g
    if not residual.is_zero():
        raise ArithmeticError("gamma_vector: residual did not vanish")
    return GammaVector(tuple(entries), n)


def bi_gamma(p: Poly, n: Optional[int] = None) -> PropertyReport:
    """Both parts of the symmetric decomposition (about ``n``) are gamma-positive."""
    if p.is_zero():
        return PropertyReport("bi_gamma", NOT_APPLICABLE, reason="zero polynomial")
    d = sym_decomp(p, n)
    alpha = gamma_vector(d.a_part, d.degree)
    beta = gamma_vector(d.b_part, d.degree - 1)
    details = {"alpha": alpha, "beta": beta, "a_part": d.a_part, "b_part": d.b_part}
    for label, vec in (("alpha", alpha), ("beta", beta)):
        k = vec.first_negative()
        if k is not None:
            w = Witness((k,), (), (), Fraction(0), vec.entries[k], label)
            return PropertyReport("bi_gamma", FAILS, w, details=details)
    return PropertyReport("bi_gamma", HOLDS, details=details)


def darroch_bounds(p: Poly) -> Tuple[int, int]:
    """``(floor(p'(1)/p(1)), ceil(p'(1)/p(1)))``."""
    if p.is_zero():
        raise ValueError("darroch_bounds: zero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("darroch_bounds: negative coefficient")
    r = evaluate(derivative(p), 1) / evaluate(p, 1)
    return math.floor(r), math.ceil(r)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def sturm_chain(p: Poly) -> List[Poly]:
    """Sturm sequence of ``p`` built from sign-corrected pseudo-remainders.

    Each member is a positive multiple of the classical member, with its
    integer content removed.
    """
    chain = [content_free(p)]
    d = derivative(p)
    if d.is_zero():
        return chain
    chain.append(content_free(d))
    while chain[-1].degree > 0:
        prev, cur = chain[-2], chain[-1]
        r = pseudo_remainder(prev, cur)
        delta = prev.degree - cur.degree
        if cur.leading() < 0 and (delta + 1) % 2:
            r = -r
        if r.is_zero():
            break
        chain.append(content_free(-r))
    return chain


def _roots_below_zero(p: Poly) -> int:
    """Distinct real roots in (-inf, 0) of a polynomial with p(0) != 0."""
    chain = sturm_chain(p)
    at_neg_inf = [_sign(s.leading()) * (-1 if s.degree % 2 else 1) for s in chain]
    at_zero = [_sign(s[0]) for s in chain]
    return _variations(at_neg_inf) - _variations(at_zero)


def sturm_real_nonpositive(p: Poly) -> PropertyReport:
    """Holds when every complex root of ``p`` is real and ``<= 0``.

    Works on the squarefree part ``p / gcd(p, p')``, which has the same root
    set, so multiplicities need no separate accounting.
    """
    name = "real_rooted"
    if p.is_zero():
        return PropertyReport(name, NOT_APPLICABLE, reason="zero polynomial")
    g = poly_gcd(p, derivative(p))
    sqf = poly_divmod(p, g)[0] if g.degree > 0 else p
    deg = sqf.degree
    count = 0
    core = sqf
    if core[0] == 0:
        count += 1
        core = Poly(core.coeffs[1:])
    count += _roots_below_zero(core) if core.degree > 0 else 0
    details = {"distinct_roots": deg, "nonpositive_real_roots": count}
    if count == deg:
        return PropertyReport(name, HOLDS, details=details)
    w = Witness((count, deg), (), (), Fraction(deg), Fraction(count), "distinct roots vs real nonpositive roots")
    return PropertyReport(name, FAILS, w, reason=f"only {count} of {deg} distinct roots are real and nonpositive",
                          details=details)


PROPERTIES = {
    "unimodal": unimodal,
    "log_concave": log_concave,
    "spiral": spiral,
    "alternatingly_increasing": alternatingly_increasing,
    "ratio_monotone": ratio_monotone,
    "bi_gamma": bi_gamma,
    "real_rooted": sturm_real_nonpositive,
}


def replay(p: Poly, report: PropertyReport) -> bool:
    """Recompute ``report.witness`` from ``p`` alone; True iff the same failure reappears."""
    w = report.witness
    if report.verdict != FAILS or w is None:
        return False
    if report.property == "bi_gamma":
        again = bi_gamma(p, (report.details["alpha"]).center_degree)
        vec = again.details.get(w.chain)
        return vec is not None and vec.entries[w.indices[0]] == w.right and w.right < 0
    if report.property == "real_rooted":
        again = sturm_real_nonpositive(p)
        return again.verdict == FAILS and again.witness == w
    cs = p.coeffs
    left, right = _prod(cs, w.lhs), _prod(cs, w.rhs)
    return left == w.left and right == w.right and left > right
