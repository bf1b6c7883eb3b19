from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulertype.families import (
    FAMILY_TABLE,
    FamilySpec,
    canonical_kind,
    gamma_recurrence,
    generate,
    generate_abc,
    step_by_derivative,
    step_general,
    sym_decomp,
    sym_decomp_recurrence,
)
from eulertype.analysis import gamma_vector
from eulertype.polycore import Poly, is_palindromic, reverse

from conftest import nonneg_rationals

abc = st.tuples(nonneg_rationals, nonneg_rationals, nonneg_rationals)


def test_small_members_by_hand():
    f = generate_abc(2, 3, 5, 2)
    assert f[0] == Poly([1])
    assert f[1] == Poly([5, 3])
    # c^2 + (ac + 2bc + ab) x + b^2 x^2
    assert f[2] == Poly([25, 10 + 30 + 6, 9])


@given(abc, st.integers(0, 6))
def test_two_step_routes_agree(params, n):
    a, b, c = params
    f = generate_abc(a, b, c, n)[n]
    assert step_general(a, b, c, f, n) == step_by_derivative(a, b, c, f, n)


def test_step_rejects_oversized_input():
    with pytest.raises(ValueError):
        step_general(1, 1, 1, Poly([1, 1, 1]), 1)


@given(abc, st.integers(0, 7))
def test_reciprocal_swaps_b_and_c(params, n):
    a, b, c = params
    f = generate_abc(a, b, c, n)[n]
    g = generate_abc(a, c, b, n)[n]
    assert reverse(f, n) == g


@given(abc, st.integers(0, 7))
def test_symmetric_parts_reconstruct(params, n):
    a, b, c = params
    f = generate_abc(a, b, c, n)[n]
    d = sym_decomp(f, n)
    assert d.reconstruct() == f
    assert is_palindromic(d.a_part, n) and is_palindromic(d.b_part, n - 1)


@given(abc)
def test_decomposition_recurrence_matches_direct_split(params):
    a, b, c = params
    rec = sym_decomp_recurrence(a, b, c, 6)
    for n, f in enumerate(generate_abc(a, b, c, 6)):
        direct = sym_decomp(f, n)
        assert (rec[n].a_part, rec[n].b_part) == (direct.a_part, direct.b_part)


def test_gamma_recurrence_shapes():
    g = gamma_recurrence(1, 2, 1, 5)
    assert len(g[0].alpha.entries) == 1 and g[0].beta.entries == ()
    assert len(g[5].alpha.entries) == 3 and len(g[5].beta.entries) == 3
    assert len(g[4].alpha.entries) == 3 and len(g[4].beta.entries) == 2


def test_gamma_recurrence_matches_extraction_small():
    for n, (pair, d) in enumerate(zip(gamma_recurrence(2, 3, 1, 8), sym_decomp_recurrence(2, 3, 1, 8))):
        assert pair.alpha == gamma_vector(d.a_part, n)
        if n:
            assert pair.beta == gamma_vector(d.b_part, n - 1)


def test_family_mapping():
    assert FamilySpec("hcd_pqr", {"p": 1, "q": 2, "r": 3}).abc() == (2, 5, 1)
    assert FamilySpec("type_b_q", {"q": 2}).abc() == (3, 2, 1)
    assert FamilySpec("r_colored", {"r": 3}).abc() == (3, 2, 1)
    assert FamilySpec("carlitz_scoville", {"p": 2, "q": 5}).abc() == (1, 2, 5)


def test_aliases_and_validation():
    assert canonical_kind("q-Eulerian") == "q_eulerian"
    assert canonical_kind("1/k") == "one_over_k"
    assert canonical_kind("general") == "general_abc"
    with pytest.raises(ValueError):
        canonical_kind("nonsense")
    with pytest.raises(ValueError):
        FamilySpec("q_eulerian", {"k": 1})
    with pytest.raises(ValueError):
        FamilySpec("q_eulerian", {"q": -1})


def test_shifted_families_start_correctly():
    q = Fraction(5, 2)
    A = generate(FamilySpec("q_eulerian", {"q": q}), 3)
    assert A[:3] == [Poly([1]), Poly([q]), Poly([q * q, q])]
    K = generate(FamilySpec("one_over_k", {"k": 3}), 3)
    assert K[:3] == [Poly([1]), Poly([1]), Poly([1, 3])]
    L = generate(FamilySpec("li_shanlan", {"q": 2}), 1)
    assert L[0] == Poly([2])


def test_li_shanlan_is_reversed_qeulerian():
    q = Fraction(3, 2)
    A = generate(FamilySpec("q_eulerian", {"q": q}), 7)
    L = generate(FamilySpec("li_shanlan", {"q": q}), 6)
    for n in range(6):
        assert L[n] == reverse(A[n + 1], n)


def test_every_family_generates():
    for kind, info in FAMILY_TABLE.items():
        spec = FamilySpec(kind, {p: 2 for p in info.params})
        polys = generate(spec, 5)
        assert len(polys) == 6
        assert all(c >= 0 for p in polys for c in p.coeffs)
