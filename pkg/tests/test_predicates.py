import functools
import itertools

import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import random_relabel, ring
from ringatlas.constructions import cyclic_ring
from ringatlas.enumeration import enumerate_unital_rings
from ringatlas.errors import BudgetExceeded, NotCommutative, WrongPropertyClass
from ringatlas.morphisms import enumerate_endomorphisms, identity_endomorphism
from ringatlas.predicates import (ELEMENTWISE, SKEW, Classification, PropertyId,
                                  Verdict, annihilator_lattice, check, check_elementwise,
                                  check_polynomial, check_skew, check_skew_polynomial,
                                  classify, classify_skew, replay_witness)
from ringatlas.ring import generated_right_ideal, is_commutative

SMALL = [R for n in range(1, 9) for R in enumerate_unital_rings(n)] + [ring("tri(Zn:2,2)")]
TINY = [R for R in SMALL if R.order <= 4]
PAIRS = [(R, a) for R in SMALL for a in enumerate_endomorphisms(R)]
ids = lambda R: R.label  # noqa: E731
pair_ids = lambda p: f"{p[0].label}/{p[1].describe()}" if isinstance(p, tuple) else None  # noqa: E731

ELEMENT_ORACLES = {
    "reduced": O.reduced, "symmetric": O.symmetric, "reversible": O.reversible,
    "semicommutative": O.semicommutative, "abelian": O.abelian,
    "commutative": O.commutative, "boolean": O.boolean,
    "von-neumann-regular": O.regular, "right-pp": O.right_pp, "baer": O.baer,
}


def _assert_sound(R, v, alpha=None):
    """A failing verdict must come with a witness that replays."""
    if not v.holds:
        assert v.witness is not None and replay_witness(R, v, alpha), v.line(R)


# oracle sweeps ----------------------------------------------------------------

@pytest.mark.parametrize("R", SMALL, ids=ids)
def test_elementwise_match_oracles(R):
    for name in ELEMENTWISE:
        v = check_elementwise(R, name)
        assert v.holds == ELEMENT_ORACLES[name](R), name
        assert not v.bounded
        _assert_sound(R, v)


@pytest.mark.parametrize("R", SMALL, ids=ids)
def test_armendariz_and_mccoy_match_oracles_at_degree_one(R):
    for name, oracle in (("armendariz", lambda: O.armendariz(R, 1)),
                         ("left-mccoy", lambda: O.left_mccoy(R, 1, 1)),
                         ("right-mccoy", lambda: O.right_mccoy(R, 1, 1))):
        v = check_polynomial(R, PropertyId(name, 1), cofactor_bound=1)
        assert v.holds == oracle(), name
        assert v.bounded
        _assert_sound(R, v)


@pytest.mark.parametrize("R", TINY, ids=ids)
def test_armendariz_matches_oracle_at_degree_two(R):
    v = check_polynomial(R, PropertyId("armendariz", 2))
    assert v.holds == O.armendariz(R, 2)


def _cached_gaussian(R, D):
    ideal = functools.lru_cache(maxsize=None)(lambda gens: O.ideal(R, gens))
    A, M, z, _, n = O.tables(R)
    P = O.polys(n, D)
    for f in P:
        for g in P:
            cf, cg = ideal(frozenset(f)), ideal(frozenset(g))
            fg = O.mul_skew(R, f, g, list(range(n)))
            if ideal(frozenset(fg)) != ideal(frozenset(M[x][y] for x in cf for y in cg)):
                return False
    return True


@pytest.mark.parametrize("R", [R for R in SMALL if is_commutative(R)], ids=ids)
def test_gaussian_matches_oracle_at_degree_one(R):
    v = check_polynomial(R, PropertyId("gaussian", 1))
    assert v.holds == _cached_gaussian(R, 1)
    _assert_sound(R, v)


def test_gaussian_oracle_matches_uncached_version():
    for R in TINY:
        if is_commutative(R):
            assert O.gaussian(R, 1) == _cached_gaussian(R, 1)


@pytest.mark.parametrize("pair", PAIRS, ids=pair_ids)
def test_skew_properties_match_oracles(pair):
    R, a = pair
    al = a.map
    expect = {
        "alpha-rigid": O.alpha_rigid(R, al),
        "alpha-compatible": O.alpha_compatible(R, al),
        "condition-c-alpha": O.condition_c(R, al),
        "right-alpha-symmetric": O.symmetric(R, al),
        "left-alpha-symmetric": O.symmetric(R, al, left=True),
        "right-alpha-reversible": O.reversible(R, al, left=False),
        "left-alpha-reversible": O.reversible(R, al, left=True),
        "alpha-semicommutative": O.semicommutative(R, al),
        "alpha-unital": al[R.one] == R.one,
        "alpha-injective": len(set(al)) == R.order,
        "alpha-fixes-idempotents": all(al[e] == e for e in O.idempotents(R)),
    }
    expect["alpha-symmetric"] = expect["right-alpha-symmetric"] and expect["left-alpha-symmetric"]
    expect["alpha-reversible"] = (expect["right-alpha-reversible"]
                                  and expect["left-alpha-reversible"])
    assert set(expect) == set(SKEW)
    for name in SKEW:
        v = check_skew(R, a, name)
        assert v.holds == expect[name], name
        _assert_sound(R, v, a)
    v = check_skew_polynomial(R, a, PropertyId("alpha-armendariz", 1))
    assert v.holds == O.armendariz(R, 1, al)
    _assert_sound(R, v, a)


# worked values ----------------------------------------------------------------

def test_z4():
    R = cyclic_ring(4)
    assert check_elementwise(R, "symmetric").holds
    v = check_elementwise(R, "reduced")
    assert not v.holds and v.witness.get("a") == 2
    assert v.line(R) == "reduced: FALSE witness a=2"
    assert check_polynomial(R, PropertyId("armendariz", 2)).holds
    c = classify(R)
    for name in ("symmetric", "reversible", "semicommutative", "abelian", "armendariz"):
        assert c.holds(name)
    assert not c.holds("reduced")


def test_triangular_ring_is_not_reversible():
    R = ring("tri(Zn:2,2)")
    v = check_elementwise(R, "reversible")
    a, b = v.witness.get("a"), v.witness.get("b")
    assert R.mul[a, b] == R.zero and R.mul[b, a] != R.zero
    c = classify(R)
    for name in ("abelian", "semicommutative", "reversible", "symmetric", "reduced"):
        assert not c.holds(name)


def test_klein_product_baer_lattice():
    R = ring("prod(Zn:2,Zn:2)")
    assert check_elementwise(R, "baer").holds
    sets = sorted(tuple(sorted(int(i) for i in mask.nonzero()[0]))
                  for mask, _ in annihilator_lattice(R))
    assert len(sets) == 4
    eR = {tuple(generated_right_ideal(R, e)) for e in range(R.order)}
    assert set(sets) <= eR
    assert (0,) in sets and tuple(range(4)) in sets


def test_dorroh_truncation_is_regular():
    assert check_elementwise(ring("dtrunc:2"), "von-neumann-regular").holds


def test_constant_diagonal_four_is_not_armendariz_at_degree_one():
    R = ring("cdiag(Zn:2,4)")
    v = check_polynomial(R, PropertyId("armendariz", 1))
    assert not v.holds and v.bounded
    f, g = v.witness.get("f"), v.witness.get("g")
    assert len(f) == 2 and len(g) == 2
    assert replay_witness(R, v)


def _is_field(R):
    return R.order > 1 and all(R.mul[a, b] != R.zero
                               for a in range(R.order) for b in range(R.order)
                               if a != R.zero and b != R.zero)


FIELDS = [R for R in SMALL if _is_field(R)]


def test_field_list():
    assert sorted(R.order for R in FIELDS) == [2, 3, 4, 5, 7, 8]


@pytest.mark.parametrize("R", FIELDS, ids=ids)
def test_fields(R):
    assert check_polynomial(R, PropertyId("gaussian", 2)).holds
    c = classify(R)
    assert all(v.holds for k, v in c.verdicts.items() if k != "boolean")
    assert c.holds("boolean") == (R.order == 2)
    for a in enumerate_endomorphisms(R):
        assert check_skew(R, a, "alpha-symmetric").holds
    assert check_elementwise(R, "reversible").vacuous


def test_right_mccoy_on_r2():
    assert check_polynomial(ring("cdiag(Zn:2,2)"), PropertyId("right-mccoy", 2),
                            cofactor_bound=2).holds


def test_zero_ring_is_vacuously_alpha_armendariz():
    R = cyclic_ring(1)
    assert check_skew_polynomial(R, identity_endomorphism(R), degree_bound=2).holds


def test_error_classes():
    R = ring("tri(Zn:2,2)")
    with pytest.raises(NotCommutative):
        check_polynomial(R, PropertyId("gaussian", 1))
    g = classify(R).verdicts["gaussian"]
    assert not g.holds and g.note == "defined only for commutative rings" and replay_witness(R, g)
    with pytest.raises(WrongPropertyClass):
        check_elementwise(R, "armendariz")
    with pytest.raises(WrongPropertyClass):
        check_polynomial(R, "reduced")
    with pytest.raises(WrongPropertyClass):
        check(R, "alpha-rigid")
    with pytest.raises(WrongPropertyClass):
        PropertyId("armendariz")
    with pytest.raises(WrongPropertyClass):
        PropertyId("reduced", 2)
    with pytest.raises(BudgetExceeded):
        check_polynomial(ring("cdiag(Zn:2,4)"), PropertyId("armendariz", 3), budget=1e6)


def test_failing_verdict_needs_witness():
    with pytest.raises(ValueError):
        Verdict(PropertyId("reduced"), False)


def test_replay_rejects_a_tampered_witness():
    R = cyclic_ring(4)
    v = check_elementwise(R, "reduced")
    from dataclasses import replace
    bad = replace(v, witness=replace(v.witness, elements=(("a", 1),)))
    assert not replay_witness(R, bad)
    assert not replay_witness(R, check_elementwise(R, "symmetric"))


def test_classification_round_trips_through_dict():
    R = ring("lower(Zn:4,2)")
    c = classify(R, 1)
    again = Classification.from_dict(c.to_dict())
    assert again.lines(R) == c.lines(R) and again.vector() == c.vector()
    from ringatlas.recipes import bottom_right_alpha
    a = bottom_right_alpha(R)
    s = classify_skew(R, a, 1)
    assert Classification.from_dict(s.to_dict()).lines(R) == s.lines(R)


# invariants ---------------------------------------------------------------------

@pytest.mark.parametrize("R", SMALL, ids=ids)
def test_identity_endomorphism_coincides_with_classical(R):
    a = identity_endomorphism(R)
    pairs = [("alpha-symmetric", "symmetric"), ("alpha-reversible", "reversible"),
             ("alpha-semicommutative", "semicommutative"), ("alpha-rigid", "reduced")]
    for skew, plain in pairs:
        assert check_skew(R, a, skew).holds == check_elementwise(R, plain).holds
    assert check_skew(R, a, "alpha-compatible").holds
    assert (check_skew_polynomial(R, a, degree_bound=1).holds
            == check_polynomial(R, PropertyId("armendariz", 1)).holds)


@pytest.mark.parametrize("pair", PAIRS, ids=pair_ids)
def test_endomorphism_invariants(pair):
    R, a = pair
    if check_skew(R, a, "alpha-rigid").holds:
        assert a.injective
        assert check_elementwise(R, "reduced").holds
        assert check_skew_polynomial(R, a, degree_bound=2).holds
    if check_skew(R, a, "alpha-semicommutative").holds:
        assert a.unital == check_skew(R, a, "alpha-fixes-idempotents").holds


@pytest.mark.parametrize("R", SMALL, ids=ids)
def test_endomorphisms_close_under_composition(R):
    ends = {a.map for a in enumerate_endomorphisms(R)}
    for f, g in itertools.product(ends, repeat=2):
        assert tuple(f[x] for x in g) in ends


@given(st.sampled_from(SMALL + [ring("cdiag(Zn:2,3)")]), st.integers(0, 10**6))
def test_classification_is_isomorphism_invariant(R, seed):
    S, _ = random_relabel(R, seed)
    assert classify(R, 1).vector() == classify(S, 1).vector()
