import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.combinatorics import Composition, Permutation
from shared.algebra.demazure import (
    DemazurePlan,
    arrow_left,
    arrow_left_complement,
    arrow_right,
    demazure,
    demazure_on_positions,
    symmetrize,
)
from shared.algebra.errors import BadParameter, NonReducedWord
from shared.algebra.laurent import PolynomialRing
from shared.algebra.rational import RationalFunction
from shared.algebra.scalars import get_field


@pytest.fixture
def ring(qq):
    return PolynomialRing(qq, 3)


def test_demazure_small_cases(ring):
    assert demazure(1, ring.gen(1)) == ring.one
    assert demazure(1, ring.gen(2)) == -ring.one
    assert demazure(1, ring.parse("x1^-1")) == ring.parse("-x1^-1*x2^-1")
    assert demazure(2, ring.gen(1)) == ring.zero


def test_demazure_range(ring):
    with pytest.raises(BadParameter):
        demazure(3, ring.gen(1))


def test_plan_rejects_non_reduced_word():
    w = Permutation.simple(3, 1)
    with pytest.raises(NonReducedWord):
        DemazurePlan.for_permutation(w, (1, 1, 1))


def test_longest_demazure_of_staircase(ring):
    # ∂_{w_0}(x1^2 x2) = 1
    assert DemazurePlan.longest(3).apply(ring.parse("x1^2*x2")) == ring.one


def test_demazure_on_positions(ring):
    plan = DemazurePlan.for_permutation(Permutation.simple(2, 1))
    assert demazure_on_positions(plan, ring.gen(1), [0, 2]) == ring.one
    assert demazure_on_positions(plan, ring.gen(3), [0, 2]) == -ring.one


def test_symmetrize(ring):
    assert symmetrize(ring.gen(1), Composition((2, 1))) == ring.parse("x1 + x2")


def test_arrow_polys(ring, qq):
    lam = Composition((2, 1))
    q = qq(2)
    assert arrow_right(ring, lam, q) == ring.parse("x1 - 2*x2")
    assert arrow_left(ring, lam, q) == ring.parse("x2 - 2*x1")
    d = Composition((3,))
    assert arrow_left(ring, lam, q) * arrow_left_complement(ring, lam, q) == arrow_left(ring, d, q)


exps = st.tuples(*[st.integers(min_value=-2, max_value=3)] * 3)


@settings(derandomize=True, max_examples=40)
@given(st.dictionaries(exps, st.integers(min_value=-4, max_value=4), max_size=4), st.sampled_from([1, 2]))
def test_demazure_matches_quotient(terms, r):
    ring = PolynomialRing(get_field(0), 3)
    f = ring.from_terms(terms)
    lhs = RationalFunction.from_poly(demazure(r, f))
    rhs = RationalFunction(f - f.swap(r), ring.gen(r) - ring.gen(r + 1))
    assert lhs == rhs


@settings(derandomize=True, max_examples=20)
@given(st.dictionaries(exps, st.integers(min_value=-4, max_value=4), max_size=3))
def test_demazure_squares_to_zero(terms):
    ring = PolynomialRing(get_field(0), 3)
    f = ring.from_terms(terms)
    assert demazure(1, demazure(1, f)) == ring.zero
