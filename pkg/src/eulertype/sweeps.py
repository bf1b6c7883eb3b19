"""Parameter sweeps that check the ratio-monotonicity and bi-gamma claims.

A sweep walks a grid of family parameters, keeps the cells whose parameters
satisfy the claim's hypothesis (boundary equalities included), generates the
polynomials and records every failed property as a :class:`Violation`.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import analysis
from .analysis import HOLDS, PropertyReport, Witness
from .families import FamilySpec, gamma_recurrence, generate, generate_abc
from .oracle import worker_count
from .polycore import Poly, as_scalar, reverse

__all__ = [
    "CLAIMS",
    "ParamRange",
    "SweepPlan",
    "Violation",
    "SweepOutcome",
    "run_sweep",
    "corollary_suite",
    "theorem1_hypothesis",
    "statement_ii_hypothesis",
]


@dataclass(frozen=True)
class ParamRange:
    """Inclusive rational range ``start, start+step, ..., <= stop``."""

    start: Fraction
    stop: Fraction
    step: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("start", "stop", "step"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.step <= 0:
            raise ValueError("range step must be positive")
        if self.stop < self.start:
            raise ValueError(f"empty range {self.start}..{self.stop}")

    @classmethod
    def single(cls, v) -> "ParamRange":
        return cls(v, v, 1)

    def values(self) -> List[Fraction]:
        out, v = [], self.start
        while v <= self.stop:
            out.append(v)
            v += self.step
        return out


@dataclass(frozen=True)
class Violation:
    """A failed claim on one polynomial.

    ``family`` and ``n`` pick the polynomial from :func:`generate`; when
    ``reciprocal`` is set the property was checked on its coefficient reversal.
    """

    claim: str
    family: FamilySpec
    n: int
    reciprocal: bool
    property: str
    witness: Optional[Witness]
    reason: str = ""

    def params_key(self) -> Tuple:
        return (self.family.kind, tuple(sorted(self.family.params.items())), self.n,
                self.claim, self.property)

    def polynomial(self) -> Poly:
        p = generate(self.family, self.n)[self.n]
        return reverse(p, _nominal_degree(self.family, self.n)) if self.reciprocal else p


@dataclass
class SweepOutcome:
    cells_checked: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepOutcome") -> "SweepOutcome":
        return SweepOutcome(self.cells_checked + other.cells_checked,
                            self.violations + other.violations)

    def sorted(self) -> "SweepOutcome":
        return SweepOutcome(self.cells_checked, sorted(self.violations, key=_violation_sort_key))


def _violation_sort_key(v: Violation):
    kind, params, n, claim, prop = v.params_key()
    return (kind, tuple((k, val) for k, val in params), n, claim, prop)


def _nominal_degree(spec: FamilySpec, n: int) -> int:
    """Degree the family assigns to its index-``n`` member."""
    if spec.info.shifted:
        return max(n - 1, 0)
    return n


# -- hypotheses ---------------------------------------------------------------

def theorem1_hypothesis(a, b, c) -> bool:
    return a + c >= b >= c > 0


def statement_ii_hypothesis(a, b, c) -> bool:
    return a + b >= c >= b > 0


def _hcd_forward(P) -> bool:
    p, q, r = P["p"], P["q"], P["r"]
    return q + 2 * p >= q * r >= 2 * p > 0


def _hcd_reverse(P) -> bool:
    p, q, r = P["p"], P["q"], P["r"]
    # qr > p keeps the mapped b = qr - p positive, so deg P_n = n
    return q * (1 + r) >= 2 * p >= q * r > 0 and q * r > p


# -- per-cell checks ------------------------------------------------------------

def _abc_spec(a, b, c) -> FamilySpec:
    return FamilySpec("general_abc", {"a": a, "b": b, "c": c})


def _record(out, claim, spec, n, reciprocal, report: PropertyReport):
    if report.verdict != HOLDS:
        out.append(Violation(claim, spec, n, reciprocal, report.property, report.witness,
                             report.reason))


def _check_bigamma_two_paths(claim, a, b, c, n_max, out):
    spec = _abc_spec(a, b, c)
    fs = generate_abc(a, b, c, n_max)
    gammas = gamma_recurrence(a, b, c, n_max)
    for n in range(1, n_max + 1):
        rep = analysis.bi_gamma(fs[n], n)
        pair = gammas[n]
        if (rep.details["alpha"].entries != pair.alpha.entries
                or rep.details["beta"].entries != pair.beta.entries):
            out.append(Violation(claim, spec, n, False, "gamma_paths_agree", None,
                                 "gamma recurrence disagrees with direct extraction"))
            continue
        _record(out, claim, spec, n, False, rep)


def _check_ratio(claim, a, b, c, n_max, out, reciprocal):
    spec = _abc_spec(a, b, c)
    for n, f in enumerate(generate_abc(a, b, c, n_max)):
        if n == 0:
            continue
        target = reverse(f, n) if reciprocal else f
        _record(out, claim, spec, n, reciprocal, analysis.ratio_monotone(target))


def _check_real_rooted(claim, spec, n_max, out, with_modes):
    for n, f in enumerate(generate(spec, n_max)):
        if n == 0 or f.is_zero():
            continue
        rep = analysis.sturm_real_nonpositive(f)
        _record(out, claim, spec, n, False, rep)
        if with_modes and rep.holds:
            uni = analysis.unimodal(f)
            lo, hi = analysis.darroch_bounds(f)
            if not uni.holds or any(not lo <= m <= hi for m in uni.modes):
                out.append(Violation(claim, spec, n, False, "darroch_modes", uni.witness,
                                     f"modes {uni.modes} outside [{lo}, {hi}]"))


def _check_family_props(claim, spec, n_range, out, props, reciprocal):
    polys = generate(spec, max(n_range))
    for n in n_range:
        p = polys[n]
        if reciprocal:
            p = reverse(p, _nominal_degree(spec, n))
        for prop in props:
            _record(out, claim, spec, n, reciprocal, analysis.PROPERTIES[prop](p))


def _check_bigamma_expected_failure(claim, spec, n_max, out):
    p = generate(spec, n_max)[n_max]
    rep = analysis.bi_gamma(p, _nominal_degree(spec, n_max))
    if rep.verdict == HOLDS:
        out.append(Violation(claim, spec, n_max, False, "bi_gamma", None,
                             "bi_gamma unexpectedly holds"))


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    run: Callable[[FamilySpec, int, list], bool]


def _abc_claim(hyp, body):
    def run(spec: FamilySpec, n_max: int, out: list) -> bool:
        a, b, c = spec.abc()
        if not hyp(a, b, c):
            return False
        body(a, b, c, n_max, out)
        return True
    return run


def _hcd_claim(hyp, body):
    def run(spec: FamilySpec, n_max: int, out: list) -> bool:
        if spec.kind != "hcd_pqr" or not hyp(spec.params):
            return False
        a, b, c = spec.abc()
        body(a, b, c, n_max, out)
        return True
    return run


def _real_rooted_claim(name, with_modes):
    def run(spec: FamilySpec, n_max: int, out: list) -> bool:
        if not spec.coefficients_nonnegative():
            return False
        _check_real_rooted(name, spec, n_max, out, with_modes)
        return True
    return run


def _expected_failure_claim(spec: FamilySpec, n_max: int, out: list) -> bool:
    _check_bigamma_expected_failure("bigamma_fails_expected", spec, n_max, out)
    return True


def _thm1_both(name):
    def body(a, b, c, n_max, out):
        _check_bigamma_two_paths(name, a, b, c, n_max, out)
        _check_ratio(name, a, b, c, n_max, out, reciprocal=True)
    return body


CLAIMS: Dict[str, Claim] = {
    "theorem1_bigamma": Claim(
        "theorem1_bigamma", "a+c >= b >= c > 0: f_n bi-gamma-positive (two gamma routes agree)",
        _abc_claim(theorem1_hypothesis,
                   lambda a, b, c, n, out: _check_bigamma_two_paths("theorem1_bigamma", a, b, c, n, out)),
    ),
    "theorem1_ratio_reciprocal": Claim(
        "theorem1_ratio_reciprocal", "a+c >= b >= c > 0: x^n f_n(1/x) ratio monotone",
        _abc_claim(theorem1_hypothesis,
                   lambda a, b, c, n, out: _check_ratio("theorem1_ratio_reciprocal", a, b, c, n, out, True)),
    ),
    "statement_ii_ratio": Claim(
        "statement_ii_ratio", "a+b >= c >= b > 0: f_n ratio monotone",
        _abc_claim(statement_ii_hypothesis,
                   lambda a, b, c, n, out: _check_ratio("statement_ii_ratio", a, b, c, n, out, False)),
    ),
    "corollary_hcd_forward": Claim(
        "corollary_hcd_forward", "q+2p >= qr >= 2p > 0: P_n bi-gamma-positive, reciprocal ratio monotone",
        _hcd_claim(_hcd_forward, _thm1_both("corollary_hcd_forward")),
    ),
    "corollary_hcd_reverse": Claim(
        "corollary_hcd_reverse", "q(1+r) >= 2p >= qr > p: P_n ratio monotone",
        _hcd_claim(_hcd_reverse,
                   lambda a, b, c, n, out: _check_ratio("corollary_hcd_reverse", a, b, c, n, out, False)),
    ),
    "real_rooted": Claim(
        "real_rooted", "nonnegative (a, b, c): every f_n has only real nonpositive zeros",
        _real_rooted_claim("real_rooted", False),
    ),
    "darroch_modes": Claim(
        "darroch_modes", "real-rooted f_n: every mode lies within the Darroch bounds",
        _real_rooted_claim("darroch_modes", True),
    ),
    "bigamma_fails_expected": Claim(
        "bigamma_fails_expected", "bi_gamma must FAIL on the index-n_max member (counterexample confirmation)",
        _expected_failure_claim,
    ),
}

CLAIM_GROUPS = {
    "theorem1": ("theorem1_bigamma", "theorem1_ratio_reciprocal"),
    "statement_ii": ("statement_ii_ratio",),
    "bigamma_fails": ("bigamma_fails_expected",),
    "corollary_hcd": ("corollary_hcd_forward", "corollary_hcd_reverse"),
}


def expand_claims(names: Sequence[str]) -> List[str]:
    out: List[str] = []
    for raw in names:
        name = raw.strip().replace("-", "_")
        group = CLAIM_GROUPS.get(name, (name,))
        for claim in group:
            if claim not in CLAIMS:
                raise ValueError(f"unknown claim {raw!r}")
            if claim not in out:
                out.append(claim)
    return out


@dataclass(frozen=True)
class SweepPlan:
    family: str
    ranges: Dict[str, ParamRange]
    n_max: int
    assertions: Tuple[str, ...]

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        object.__setattr__(self, "assertions", tuple(expand_claims(self.assertions)))
        if not self.assertions:
            raise ValueError("a sweep needs at least one claim")
        ranges = {k: v if isinstance(v, ParamRange) else ParamRange(*v) for k, v in self.ranges.items()}
        object.__setattr__(self, "ranges", ranges)
        # validates the parameter names against the family
        next(iter(self.cells()))

    def cells(self):
        names = sorted(self.ranges)
        for combo in itertools.product(*(self.ranges[k].values() for k in names)):
            yield FamilySpec(self.family, dict(zip(names, combo)))


def _run_cell(args) -> SweepOutcome:
    spec, n_max, claims = args
    out: List[Violation] = []
    checked = 0
    for name in claims:
        if CLAIMS[name].run(spec, n_max, out):
            checked = 1
    return SweepOutcome(checked, out)


def _run_cells(jobs, workers: Optional[int]) -> SweepOutcome:
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_cell(j) for j in jobs]
    total = SweepOutcome()
    for r in results:
        total = total.merge(r)
    return total.sorted()


def run_sweep(plan: SweepPlan, workers: Optional[int] = None) -> SweepOutcome:
    """Check every claim of ``plan`` on every grid cell meeting its hypothesis.

    ``cells_checked`` counts cells where at least one claim's hypothesis held.
    """
    jobs = [(spec, plan.n_max, plan.assertions) for spec in plan.cells()]
    return _run_cells(jobs, workers)


# -- the fixed corollary grid -------------------------------------------------

F = Fraction


def _corollary_jobs():
    """(claim label, family spec, index range, properties, reciprocal)."""
    jobs = []
    for q in (F(1, 4), F(1, 2), F(3, 4), F(1)):
        spec = FamilySpec("q_eulerian", {"q": q})
        jobs.append(("q_eulerian_bigamma", spec, range(1, 16), ("bi_gamma",), False))
        jobs.append(("q_eulerian_reciprocal_ratio", spec, range(1, 16), ("ratio_monotone",), True))
    for q in (F(1), F(3, 2), F(2)):
        spec = FamilySpec("q_eulerian", {"q": q})
        jobs.append(("q_eulerian_ratio", spec, range(1, 16), ("ratio_monotone",), False))
        # A_n = a + b with a, b the gamma-positive parts of the reversal
        jobs.append(("q_eulerian_gamma_split", spec, range(1, 16), ("bi_gamma",), True))
    for k in (F(1), F(2), F(3), F(4)):
        spec = FamilySpec("one_over_k", {"k": k})
        jobs.append(("one_over_k_reciprocal_ratio", spec, range(1, 13), ("ratio_monotone",), True))
    for q in (F(1), F(2), F(3)):
        spec = FamilySpec("type_b_q", {"q": q})
        jobs.append(("type_b_bigamma", spec, range(1, 11), ("bi_gamma",), False))
        jobs.append(("type_b_reciprocal_ratio", spec, range(1, 11), ("ratio_monotone",), True))
    for q in (F(1, 4), F(1, 2), F(1)):
        spec = FamilySpec("type_b_q", {"q": q})
        jobs.append(("type_b_ratio", spec, range(1, 11), ("ratio_monotone",), False))
        jobs.append(("type_b_gamma_split", spec, range(1, 11), ("bi_gamma",), True))
    for r in (F(2), F(3), F(4)):
        spec = FamilySpec("r_colored", {"r": r})
        jobs.append(("r_colored_reciprocal_ratio", spec, range(1, 13), ("ratio_monotone",), True))
    for r in (F(1), F(3, 2), F(2)):
        spec = FamilySpec("r_colored", {"r": r})
        jobs.append(("r_colored_ratio", spec, range(1, 13), ("ratio_monotone",), False))
        jobs.append(("r_colored_gamma_split", spec, range(1, 13), ("bi_gamma",), True))
    grid = (F(1, 2), F(1), F(3, 2), F(2))
    for p, q in itertools.product(grid, grid):
        spec = FamilySpec("carlitz_scoville", {"p": p, "q": q})
        if 1 + q >= p >= q > 0:
            jobs.append(("carlitz_bigamma", spec, range(1, 13), ("bi_gamma",), False))
            jobs.append(("carlitz_reciprocal_ratio", spec, range(1, 13), ("ratio_monotone",), True))
        if 1 + p >= q >= p > 0:
            jobs.append(("carlitz_ratio", spec, range(1, 13), ("ratio_monotone",), False))
    return jobs


def _run_corollary_job(job) -> SweepOutcome:
    claim, spec, n_range, props, reciprocal = job
    out: List[Violation] = []
    _check_family_props(claim, spec, n_range, out, props, reciprocal)
    return SweepOutcome(1, out)


def corollary_suite(workers: Optional[int] = None) -> SweepOutcome:
    """Check the named special families on their fixed parameter grid."""
    jobs = _corollary_jobs()
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_corollary_job, jobs))
    else:
        results = [_run_corollary_job(j) for j in jobs]
    total = SweepOutcome()
    for r in results:
        total = total.merge(r)
    return total.sorted()
