import itertools

import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import ring
from ringatlas.constructions import cyclic_ring
from ringatlas.errors import BudgetExceeded
from ringatlas.morphisms import enumerate_endomorphisms, inner_derivation
from ringatlas.poly import (SkewPolynomial, content, ore_mul, parse_poly, poly_add,
                            poly_neg, right_zero_divisors, schoolbook_mul)

T2 = ring("tri(Zn:2,2)")
T2_ENDOS = enumerate_endomorphisms(T2)
coeffs = st.lists(st.integers(0, 7), max_size=4)


def P(cs, R=T2):
    return SkewPolynomial.of(R, cs)


def test_normalization_and_degree():
    R = cyclic_ring(4)
    assert P([1, 2, 0, 0], R).coeffs == (1, 2)
    assert P([0, 0], R).is_zero() and P([], R).degree == float("-inf")
    assert P([3, 0, 1], R).degree == 2
    assert parse_poly(R, "poly:1,2") == P([1, 2], R)


def test_unit_square_over_z4():
    R = cyclic_ring(4)
    f = P([1, 2], R)
    assert ore_mul(f, f) == P([1], R)
    assert schoolbook_mul(f, f) == P([1], R)


def test_content_is_an_ideal():
    R = cyclic_ring(12)
    assert list(content(P([4, 6], R))) == [0, 2, 4, 6, 8, 10]


@given(coeffs, coeffs)
def test_ore_with_identity_is_schoolbook(f, g):
    assert ore_mul(P(f), P(g)) == schoolbook_mul(P(f), P(g))


@given(coeffs, coeffs, st.integers(0, len(T2_ENDOS) - 1))
def test_ore_matches_twisted_convolution(f, g, k):
    a = T2_ENDOS[k]
    got = ore_mul(P(f), P(g), a)
    assert got == P(O.mul_skew(T2, f or [0], g or [0], a.map))


@given(coeffs, coeffs, coeffs, st.integers(0, len(T2_ENDOS) - 1), st.integers(0, 7))
def test_ore_extension_is_associative(f, g, h, k, c):
    a = T2_ENDOS[k]
    d = inner_derivation(T2, a, c)
    F, G, H = P(f), P(g), P(h)
    assert ore_mul(ore_mul(F, G, a, d), H, a, d) == ore_mul(F, ore_mul(G, H, a, d), a, d)


@given(coeffs, coeffs, coeffs)
def test_distributive_and_negation(f, g, h):
    F, G, H = P(f), P(g), P(h)
    assert ore_mul(F, poly_add(G, H)) == poly_add(ore_mul(F, G), ore_mul(F, H))
    assert poly_add(F, poly_neg(F)).is_zero()


@given(st.integers(0, len(T2_ENDOS) - 1), st.integers(0, 7), st.integers(0, 7))
def test_x_times_r(k, c, r):
    a = T2_ENDOS[k]
    d = inner_derivation(T2, a, c)
    x = P([T2.zero, T2.one])
    assert ore_mul(x, P([r]), a, d) == P([d(r), a(r)])


def _zero_divisor_oracle(R, D, Dp, al):
    n = R.order
    fs = [f for f in itertools.product(range(n), repeat=Dp + 1) if any(f)]
    out = []
    for g in itertools.product(range(n), repeat=D + 1):
        if any(g) and any(not any(O.mul_skew(R, f, g, al)) for f in fs):
            out.append(P(g, R))
    return out


def test_right_zero_divisors_over_z4():
    R = cyclic_ring(4)
    assert [(g.coeffs, f.coeffs) for g, f in right_zero_divisors(R, None, 0, 0)] == [((2,), (2,))]
    got = right_zero_divisors(R, None, 1, 1)
    assert len(got) == 3
    for g, f in got:
        assert ore_mul(f, g).is_zero() and not f.is_zero()


@pytest.mark.parametrize("recipe,D", [("Zn:4", 2), ("tri(Zn:2,2)", 1), ("prod(Zn:2,Zn:2)", 2)])
def test_right_zero_divisors_match_brute_force(recipe, D):
    R = ring(recipe)
    for a in [None] + enumerate_endomorphisms(R):
        al = list(range(R.order)) if a is None else a.map
        got = right_zero_divisors(R, a, D, D)
        assert [g for g, _ in got] == _zero_divisor_oracle(R, D, D, al)
        for g, f in got:
            assert ore_mul(f, g, a).is_zero()


def test_zero_divisor_budget():
    with pytest.raises(BudgetExceeded):
        right_zero_divisors(ring("cdiag(Zn:2,4)"), None, 3, 3, budget=1e6)
