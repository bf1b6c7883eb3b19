"""Brute-force and generating-function oracles.

These routes never touch the recurrences in :mod:`eulertype.families`; they
count permutation statistics directly or expand closed-form EGFs, so agreement
with the recurrences is an independent check.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .families import FamilySpec
from .polycore import Poly, as_scalar
from .series import SeriesZ

__all__ = [
    "BiPoly",
    "SN_CAP",
    "BN_CAP",
    "worker_count",
    "excedances",
    "cycle_count",
    "descents",
    "big_descents",
    "type_b_descents",
    "qeulerian_bruteforce",
    "typeb_bruteforce",
    "big_descent_bruteforce",
    "descent_bruteforce",
    "one_over_k_bruteforce",
    "egf_series",
    "egf_coefficients",
    "Lemma2Result",
    "Lemma2HypothesisError",
    "lemma2_hypothesis",
    "lemma2_check",
]

SN_CAP = 9
BN_CAP = 7

WORKERS_ENV = "EULERTYPE_WORKERS"


def worker_count(default: int = 1) -> int:
    """Process count for enumeration and sweeps, from ``$EULERTYPE_WORKERS``."""
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


class BiPoly:
    """Dense integer table ``coeffs[i][j]`` = coefficient of ``x^i q^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Sequence[int]] = ()):
        rows = [list(r) for r in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [0] * (width - len(r)) for r in rows]
        # trim zero rows and columns at the high end
        while rows and not any(rows[-1]):
            rows.pop()
        while rows and not any(r[-1] for r in rows):
            rows = [r[:-1] for r in rows]
        self.coeffs: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], int]) -> "BiPoly":
        if not terms:
            return cls()
        nx = max(i for i, _ in terms) + 1
        nq = max(j for _, j in terms) + 1
        rows = [[0] * nq for _ in range(nx)]
        for (i, j), v in terms.items():
            rows[i][j] += v
        return cls(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        terms: Dict[Tuple[int, int], int] = {}
        for src in (self, other):
            for i, row in enumerate(src.coeffs):
                for j, v in enumerate(row):
                    if v:
                        terms[(i, j)] = terms.get((i, j), 0) + v
        return BiPoly.from_terms(terms)

    def substitute_q(self, q) -> Poly:
        q = as_scalar(q)
        return Poly(sum((v * q ** j for j, v in enumerate(row)), Fraction(0)) for row in self.coeffs)

    def q_polynomial(self, i: int) -> Poly:
        """Coefficient of ``x^i`` as a polynomial in ``q``."""
        return Poly(self.coeffs[i]) if i < len(self.coeffs) else Poly()

    def total(self) -> int:
        return sum(sum(r) for r in self.coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({[list(r) for r in self.coeffs]})"


# -- permutation statistics (one-line notation, values 1..n) -----------------

def excedances(perm: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(perm, 1) if v > i)


def cycle_count(perm: Sequence[int]) -> int:
    n = len(perm)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j - 1]
    return cycles


def descents(perm: Sequence[int]) -> int:
    return sum(1 for u, v in zip(perm, perm[1:]) if u > v)


def big_descents(perm: Sequence[int]) -> int:
    return sum(1 for u, v in zip(perm, perm[1:]) if u >= v + 2)


def type_b_descents(signed: Sequence[int]) -> int:
    """Descents of ``(0, s_1, ..., s_n)`` at positions ``0..n-1``."""
    seq = (0,) + tuple(signed)
    return sum(1 for u, v in zip(seq, seq[1:]) if u > v)


def _check_range(name: str, n: int, lo: int, hi: int):
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"{name}: n={n} outside the enumeration cap [{lo}, {hi}]")


def _perms_with_first(n: int, first: int) -> Iterable[Tuple[int, ...]]:
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        yield (first,) + tail


def _exc_cyc_block(args) -> Dict[Tuple[int, int], int]:
    n, first = args
    acc: Dict[Tuple[int, int], int] = {}
    for p in _perms_with_first(n, first):
        key = (excedances(p), cycle_count(p))
        acc[key] = acc.get(key, 0) + 1
    return acc


def _stat_block(args) -> Dict[int, int]:
    n, first, stat = args
    fn = {"des": descents, "bigdes": big_descents}[stat]
    acc: Dict[int, int] = {}
    for p in _perms_with_first(n, first):
        k = fn(p)
        acc[k] = acc.get(k, 0) + 1
    return acc


def _typeb_block(args) -> Dict[Tuple[int, int], int]:
    n, first = args
    acc: Dict[Tuple[int, int], int] = {}
    for p in _perms_with_first(n, first):
        for mask in range(1 << n):
            signed = tuple(-v if mask >> i & 1 else v for i, v in enumerate(p))
            key = (type_b_descents(signed), bin(mask).count("1"))
            acc[key] = acc.get(key, 0) + 1
    return acc


def _run_blocks(fn, jobs: List, workers: Optional[int]) -> List[Dict]:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(fn, jobs))


def _merge(blocks: List[Dict]) -> Dict:
    out: Dict = {}
    for b in blocks:
        for k, v in b.items():
            out[k] = out.get(k, 0) + v
    return out


def qeulerian_bruteforce(n: int, workers: Optional[int] = None) -> BiPoly:
    """``sum over S_n of x^exc q^cyc``, by enumeration (``1 <= n <= 9``)."""
    _check_range("qeulerian_bruteforce", n, 1, SN_CAP)
    blocks = _run_blocks(_exc_cyc_block, [(n, f) for f in range(1, n + 1)], workers)
    return BiPoly.from_terms(_merge(blocks))


def typeb_bruteforce(n: int, workers: Optional[int] = None) -> BiPoly:
    """``sum over signed permutations of x^des_B q^neg`` (``1 <= n <= 7``)."""
    _check_range("typeb_bruteforce", n, 1, BN_CAP)
    blocks = _run_blocks(_typeb_block, [(n, f) for f in range(1, n + 1)], workers)
    return BiPoly.from_terms(_merge(blocks))


def _stat_poly(n: int, stat: str, workers) -> Poly:
    blocks = _run_blocks(_stat_block, [(n, f, stat) for f in range(1, n + 1)], workers)
    acc = _merge(blocks)
    return Poly([acc.get(k, 0) for k in range(max(acc) + 1)])


def big_descent_bruteforce(m: int, workers: Optional[int] = None) -> Poly:
    """Distribution of big descents (``pi(i) >= pi(i+1) + 2``) over S_m, ``2 <= m <= 9``."""
    _check_range("big_descent_bruteforce", m, 2, SN_CAP)
    return _stat_poly(m, "bigdes", workers)


def descent_bruteforce(n: int, workers: Optional[int] = None) -> Poly:
    """Distribution of ordinary descents over S_n, ``1 <= n <= 9``."""
    _check_range("descent_bruteforce", n, 1, SN_CAP)
    return _stat_poly(n, "des", workers)


def one_over_k_bruteforce(k, n: int, workers: Optional[int] = None) -> Poly:
    """``sum over S_n of x^exc k^(n - cyc)``."""
    _check_range("one_over_k_bruteforce", n, 1, SN_CAP)
    k = as_scalar(k)
    table = qeulerian_bruteforce(n, workers)
    return Poly(
        sum((v * k ** (n - j) for j, v in enumerate(row) if v), Fraction(0))
        for row in table.coeffs
    )


# -- exponential generating functions ---------------------------------------

def _normalized_exp_minus_one(scale, order: int) -> SeriesZ:
    """``(e^{scale (1-x) z} - 1) / (1 - x)`` as a series with polynomial coefficients."""
    scale = as_scalar(scale)
    one_minus_x = Poly([1, -1])
    coeffs = [Poly()]
    fact = 1
    power = Poly([1])  # (1-x)^(j-1)
    for j in range(1, order + 1):
        fact *= j
        coeffs.append(power * (scale ** j / fact))
        power = power * one_minus_x
    return SeriesZ(coeffs, order)


def egf_series(spec: FamilySpec, order: int) -> SeriesZ:
    """Closed-form EGF of ``spec`` expanded to ``z^order``.

    Each closed form is rewritten as a power of a series ``D`` with
    ``D(0) = 1`` by dividing out the factor ``1 - x`` first; raising to a
    rational power goes through ``exp(r log D)``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    one = SeriesZ.constant(1, order)
    if spec.kind == "q_eulerian":
        # ((1-x) / (e^{z(x-1)} - x))^q
        d = one + _normalized_exp_minus_one(-1, order)
        exponent = -spec.params["q"]
        return d.power(exponent)
    if spec.kind == "one_over_k":
        # ((1-x) / (e^{kz(x-1)} - x))^(1/k)
        k = spec.params["k"]
        if k <= 0:
            raise ValueError("one_over_k EGF needs k > 0")
        d = one + _normalized_exp_minus_one(-k, order)
        return d.power(-1 / k)
    if spec.kind == "hcd_pqr":
        # e^{p(1-x)z} ((1-x) / (1 - x e^{q(1-x)z}))^r
        p, q, r = spec.params["p"], spec.params["q"], spec.params["r"]
        d = one - _normalized_exp_minus_one(q, order) * Poly([0, 1])
        linear = SeriesZ([Poly(), Poly([p, -p])], order)
        return (linear - d.log() * r).exp()
    raise ValueError(f"no closed-form EGF for family {spec.kind!r}")


def egf_coefficients(spec: FamilySpec, order: int) -> List[Poly]:
    """``n! [z^n]`` of the closed-form EGF for ``n = 0..order``."""
    s = egf_series(spec, order)
    if s[0] != Poly([1]):
        raise ArithmeticError("EGF constant term is not 1")
    return s.egf_values()


# -- the six-term ratio lemma -------------------------------------------------

class Lemma2HypothesisError(ValueError):
    """Raised when the lemma's hypotheses do not hold for the given tuple."""


@dataclass(frozen=True)
class Lemma2Result:
    """Sub-verdicts of the ratio lemma; ``conclusion`` is the main inequality.

    ``mediant_bound`` is ``a1/a2 <= (a3+a5)/(a4+a6)``; ``weighted`` compares the
    two weighted ratios without the ``mu`` term; ``weighted_vs_last`` and
    ``last_vs_difference`` are the two links bounding the weighted ratio by
    ``(a5-a3)/(a6-a4)``.
    """

    mediant_bound: bool
    weighted: bool
    weighted_vs_last: bool
    last_vs_difference: bool
    conclusion: bool

    @property
    def all_hold(self) -> bool:
        return (self.mediant_bound and self.weighted and self.weighted_vs_last
                and self.last_vs_difference and self.conclusion)


def lemma2_hypothesis(a: Sequence, l1, l2, lam, mu) -> Optional[str]:
    """Return None when the hypotheses hold, else a message naming the first failure."""
    if len(a) != 6:
        return "need exactly six values a1..a6"
    a1, a2, a3, a4, a5, a6 = (as_scalar(v) for v in a)
    l1, l2, lam, mu = (as_scalar(v) for v in (l1, l2, lam, mu))
    if min(a1, a2, a3, a4, a5, a6) <= 0:
        return "a1..a6 must be positive"
    checks = [
        (a1 * a4 <= a3 * a2, "a1/a2 <= a3/a4"),
        (a3 * a6 <= a5 * a4, "a3/a4 <= a5/a6"),
        (a2 * a5 <= a4 * a3, "a2/a3 <= a4/a5"),
        (a3 <= a5, "a3 <= a5"),
        (a4 <= a6, "a4 <= a6"),
        (0 < l2, "0 < lambda2"),
        (l2 <= l1, "lambda2 <= lambda1"),
        (l1 <= lam, "lambda1 <= lambda"),
        (mu >= 0, "mu >= 0"),
    ]
    for ok, what in checks:
        if not ok:
            return f"hypothesis violated: {what}"
    return None


def lemma2_check(a: Sequence, l1, l2, lam, mu) -> Lemma2Result:
    """Evaluate the lemma's conclusion and intermediate inequalities exactly."""
    problem = lemma2_hypothesis(a, l1, l2, lam, mu)
    if problem:
        raise Lemma2HypothesisError(problem)
    a1, a2, a3, a4, a5, a6 = (as_scalar(v) for v in a)
    l1, l2, lam, mu = (as_scalar(v) for v in (l1, l2, lam, mu))

    left_num = l1 * a1 + (lam - l1) * a3
    left_den = l2 * a2 + (lam - l2) * a4
    mid_num = l1 * a3 + (lam - l1) * a5
    mid_den = l2 * a4 + (lam - l2) * a6
    right_num = mid_num + mu * (a5 - a3)
    right_den = mid_den + mu * (a6 - a4)
    # all denominators are positive, so ratios compare by cross-multiplication
    return Lemma2Result(
        mediant_bound=a1 * (a4 + a6) <= a2 * (a3 + a5),
        weighted=left_num * mid_den <= mid_num * left_den,
        weighted_vs_last=mid_num * a6 <= a5 * mid_den,
        last_vs_difference=a5 * (a6 - a4) <= a6 * (a5 - a3),
        conclusion=left_num * right_den <= right_num * left_den,
    )
