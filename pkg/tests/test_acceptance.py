"""The ten acceptance criteria, each at its stated tolerance and time budget."""
import itertools
import random
import time
from fractions import Fraction

import pytest

from eulertype.analysis import (
    alternatingly_increasing,
    bi_gamma,
    darroch_bounds,
    gamma_vector,
    log_concave,
    ratio_monotone,
    spiral,
    sturm_real_nonpositive,
    unimodal,
)
from eulertype.families import (
    FamilySpec,
    gamma_recurrence,
    generate,
    generate_abc,
    sym_decomp,
)
from eulertype.oracle import (
    big_descent_bruteforce,
    egf_coefficients,
    lemma2_check,
    lemma2_hypothesis,
    one_over_k_bruteforce,
    qeulerian_bruteforce,
    typeb_bruteforce,
)
from eulertype.polycore import Poly, reverse
from eulertype.sweeps import SweepPlan, ParamRange, run_sweep, theorem1_hypothesis, statement_ii_hypothesis

F = Fraction
criterion = pytest.mark.criterion


def member(kind, n, **params):
    return generate(FamilySpec(kind, params), n)[n]


def P(*cs):
    return Poly(cs)


# -- 1 -------------------------------------------------------------------------

@criterion(1, "golden polynomials reproduced exactly (< 1 s)")
def test_golden_reproduction():
    start = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(10):
        a, b, c = (F(rng.randint(0, 40), rng.randint(1, 9)) for _ in range(3))
        f = generate_abc(a, b, c, 3)
        assert f[1] == P(c, b)
        assert f[2] == P(c**2, a*c + 2*b*c + a*b, b**2)
        assert f[3] == P(c**3,
                         a**2*c + a**2*b + 3*a*b*c + 3*b*c**2 + 3*a*c**2,
                         a**2*c + a**2*b + 3*a*b*c + 3*b**2*c + 3*a*b**2,
                         b**3)
        d1, d2 = sym_decomp(f[1], 1), sym_decomp(f[2], 2)
        assert (d1.a_part, d1.b_part) == (P(c, c), P(b - c))
        assert d2.a_part == P(c**2, a*b - b**2 + a*c + 2*b*c + c**2, c**2)
        assert d2.b_part == P(b**2 - c**2, b**2 - c**2)

    for q in (F(1, 3), F(1, 2), F(1), F(2), F(7, 3)):
        assert member("q_eulerian", 1, q=q) == P(q)
        assert member("q_eulerian", 2, q=q) == P(q * q, q)
        assert member("q_eulerian", 3, q=q) == P(q**3, q * (3*q + 1), q)

    assert member("q_eulerian", 2, q=2) == P(4, 2)
    assert member("q_eulerian", 3, q=2) == P(8, 14, 2)
    assert member("q_eulerian", 4, q=2) == P(16, 66, 36, 2)
    assert member("q_eulerian", 4, q=3) == P(81, 201, 75, 3)
    assert member("q_eulerian", 4, q=4) == P(256, 452, 128, 4)

    for k in (1, 2, 3, 4):
        assert member("one_over_k", 2, k=k) == P(1, k)
        assert member("one_over_k", 3, k=k) == P(1, 3*k + k*k, k*k)
        assert member("one_over_k", 5, k=k) == P(
            1, 10*k + 10*k**2 + 5*k**3 + k**4, 25*k**2 + 30*k**3 + 11*k**4, 15*k**3 + 11*k**4, k**4)

    for q in (1, 2, 3):
        assert member("type_b_q", 1, q=q) == P(1, q)
        assert member("type_b_q", 4, q=q) == P(
            1,
            11 + 32*q + 24*q**2 + 8*q**3 + q**4,
            11 + 56*q + 96*q**2 + 56*q**3 + 11*q**4,
            1 + 8*q + 24*q**2 + 32*q**3 + 11*q**4,
            q**4)

    d = sym_decomp(P(1, 10, 4))
    assert (d.a_part, d.b_part) == (P(1, 7, 1), P(3, 3))
    assert time.perf_counter() - start < 1.0


# -- 2, 3 ------------------------------------------------------------------------

GRID05 = {k: ParamRange(0, 5, 1) for k in "abc"}


@criterion(2, "bi-gamma (two routes) and reciprocal ratio monotonicity on [0,5]^3, n <= 20 (< 2 min)")
def test_theorem1_sweep():
    start = time.perf_counter()
    out = run_sweep(SweepPlan("general_abc", GRID05, 20, ("theorem1",)))
    elapsed = time.perf_counter() - start
    expected = sum(theorem1_hypothesis(a, b, c) for a, b, c in itertools.product(range(6), repeat=3))
    assert out.cells_checked == expected > 0
    assert out.violations == []
    assert elapsed < 120


@criterion(3, "ratio monotonicity when a+b >= c >= b > 0 on [0,5]^3, n <= 20")
def test_statement_ii_sweep():
    out = run_sweep(SweepPlan("general_abc", GRID05, 20, ("statement_ii",)))
    expected = sum(statement_ii_hypothesis(a, b, c) for a, b, c in itertools.product(range(6), repeat=3))
    assert out.cells_checked == expected > 0
    assert out.violations == []


# -- 4 ---------------------------------------------------------------------------

@criterion(4, "brute-force permutation oracles match the recurrences (< 1 min)")
def test_oracle_equivalence():
    start = time.perf_counter()
    for n in range(1, 9):
        table = qeulerian_bruteforce(n)
        for q in (F(1, 2), F(1), F(2), F(3)):
            assert table.substitute_q(q) == member("q_eulerian", n, q=q)
    for n in range(1, 7):
        table = typeb_bruteforce(n)
        for q in (1, 2, 3):
            assert table.substitute_q(q) == member("type_b_q", n, q=q)
    for m in range(2, 9):
        assert big_descent_bruteforce(m) == member("q_eulerian", m - 1, q=2)
    for k in (1, 2, 3, 4):
        for n in range(1, 9):
            assert one_over_k_bruteforce(k, n) == member("one_over_k", n, k=k)
    assert time.perf_counter() - start < 60


# -- 5 ---------------------------------------------------------------------------

EGF_SPECS = (
    [FamilySpec("q_eulerian", {"q": q}) for q in (F(1, 2), F(1), F(2), F(3))]
    + [FamilySpec("one_over_k", {"k": k}) for k in (1, 2, 3)]
    + [FamilySpec("hcd_pqr", {"p": p, "q": q, "r": r})
       for p, q, r in ((1, 1, 2), (1, 2, 1), (2, 2, 1), (1, 2, F(3, 2)))]
)


@criterion(5, "exponential generating functions match the recurrences, n <= 12")
def test_egf_equivalence():
    for spec in EGF_SPECS:
        assert egf_coefficients(spec, 12) == generate(spec, 12), spec


# -- 6 ---------------------------------------------------------------------------

@criterion(6, "gamma recurrence equals direct gamma extraction on [0,4]^3, n <= 15")
def test_gamma_recurrence_consistency():
    for a, b, c in itertools.product(range(5), repeat=3):
        pairs = gamma_recurrence(a, b, c, 15)
        for n, f in enumerate(generate_abc(a, b, c, 15)):
            d = sym_decomp(f, n)
            assert pairs[n].alpha == gamma_vector(d.a_part, n), (a, b, c, n)
            if n:
                assert pairs[n].beta == gamma_vector(d.b_part, n - 1), (a, b, c, n)


# -- 7 ---------------------------------------------------------------------------

@criterion(7, "A_4(x,3), A_4(x,4): bi-gamma and alternating increase fail; ratio fails at q=4")
def test_negative_results():
    for q in (3, 4):
        p = member("q_eulerian", 4, q=q)
        r = bi_gamma(p)
        assert r.verdict == "fails"
        assert r.details["beta"].first_negative() is not None
        assert min(r.details["beta"].entries) < 0
        assert alternatingly_increasing(p).verdict == "fails"
    r = ratio_monotone(member("q_eulerian", 4, q=4))
    w = r.witness
    assert r.verdict == "fails" and w.chain == "chain2"
    assert (w.left, w.right) == (256, 128)


# -- 8 ---------------------------------------------------------------------------

@criterion(8, "real nonpositive zeros and modes within Darroch bounds, n <= 12 (< 1 min)")
def test_real_rooted_and_modes():
    start = time.perf_counter()
    for a, b, c in ((1, 1, 1), (2, 1, 1), (1, 2, 1), (3, 2, 1), (2, 2, 2)):
        for n, f in enumerate(generate_abc(a, b, c, 12)):
            assert sturm_real_nonpositive(f).holds, (a, b, c, n)
            lo, hi = darroch_bounds(f)
            modes = unimodal(f).modes
            assert modes and all(lo <= m <= hi for m in modes), (a, b, c, n)
    assert time.perf_counter() - start < 60


# -- 9 ---------------------------------------------------------------------------

def _rational(rng, hi=50):
    return F(rng.randint(1, hi), rng.randint(1, 12))


def sample_lemma2(rng):
    """Rejection sampling over rational tuples.

    The three ratios a1/a2 <= a3/a4 <= a5/a6 and the pair a4 <= a6 are drawn
    sorted; the coupled conditions a3 <= a5 and a2/a3 <= a4/a5 are left to
    the hypothesis check, which rejects and redraws.
    """
    while True:
        r1, r2, r3 = sorted(_rational(rng, 30) for _ in range(3))
        a4, a6 = sorted((_rational(rng), _rational(rng)))
        a2 = _rational(rng)
        a1, a3, a5 = r1 * a2, r2 * a4, r3 * a6
        l2 = _rational(rng, 20)
        l1 = l2 + F(rng.randint(0, 20), rng.randint(1, 6))
        lam = l1 + F(rng.randint(0, 20), rng.randint(1, 6))
        mu = F(rng.randint(0, 30), rng.randint(1, 6))
        args = ((a1, a2, a3, a4, a5, a6), l1, l2, lam, mu)
        if lemma2_hypothesis(*args) is None:
            return args


@criterion(9, "lemma conclusion and sub-inequalities on 10^4 sampled tuples")
def test_lemma2_property_suite():
    rng = random.Random(20240517)
    failures = []
    for _ in range(10_000):
        args = sample_lemma2(rng)
        res = lemma2_check(*args)
        if not res.all_hold:
            failures.append((args, res))
    assert failures == []


# -- 10 --------------------------------------------------------------------------

def _criteria_polynomials():
    for a, b, c in itertools.product(range(6), repeat=3):
        if theorem1_hypothesis(a, b, c):
            for n, f in enumerate(generate_abc(a, b, c, 20)):
                yield f
                yield reverse(f, n)
        elif statement_ii_hypothesis(a, b, c):
            yield from generate_abc(a, b, c, 20)
    for q in (F(1, 2), F(1), F(2), F(3)):
        yield from generate(FamilySpec("q_eulerian", {"q": q}), 8)
    for q in (1, 2, 3):
        yield from generate(FamilySpec("type_b_q", {"q": q}), 6)
    for k in (1, 2, 3, 4):
        yield from generate(FamilySpec("one_over_k", {"k": k}), 8)
    for spec in EGF_SPECS:
        yield from generate(spec, 12)


@criterion(10, "implication lattice on every polynomial of criteria 2-5")
def test_implication_lattice():
    seen = set()
    for p in _criteria_polynomials():
        if p.is_zero() or p in seen:
            continue
        seen.add(p)
        if ratio_monotone(p).holds:
            assert log_concave(p).holds and spiral(p).holds, p
        if bi_gamma(p).holds:
            assert alternatingly_increasing(p).holds, p
        assert spiral(p).holds == alternatingly_increasing(reverse(p, p.degree)).holds, p
    assert len(seen) > 1000
