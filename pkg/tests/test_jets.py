import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.errors import BadParameter, DivisionByZero, PoleAtPoint
from shared.algebra.jets import Jet, expand_to_jet, poly_to_jet
from shared.algebra.laurent import PolynomialRing
from shared.algebra.rational import RationalFunction
from shared.algebra.scalars import get_field


def test_order_must_be_positive(qq):
    with pytest.raises(BadParameter):
        Jet.const(qq, (qq(1),), 0, 1)


def test_poly_to_jet_shift(qq):
    ring = PolynomialRing(qq, 1)
    jet = poly_to_jet(ring.parse("x1^2"), (qq(2),), 3)
    # x² = 4 + 4u + u²
    assert jet.coefficient((0,)) == qq(4)
    assert jet.coefficient((1,)) == qq(4)
    assert jet.coefficient((2,)) == qq(1)


def test_negative_power_expansion(qq):
    ring = PolynomialRing(qq, 1)
    jet = poly_to_jet(ring.parse("x1^-1"), (qq(1),), 3)
    assert [jet.coefficient((k,)) for k in range(3)] == [qq(1), qq(-1), qq(1)]
    with pytest.raises(PoleAtPoint):
        poly_to_jet(ring.parse("x1^-1"), (qq(0),), 2)


def test_inverse_and_truncation(qq):
    point = (qq(1),)
    one_plus_u = Jet.const(qq, point, 3, 1) + Jet.shifted_variable(qq, point, 3, 0)
    inv = one_plus_u.inverse()
    assert one_plus_u * inv == Jet.const(qq, point, 3, 1)
    assert inv.truncate(2) == (Jet.const(qq, point, 2, 1) - Jet.shifted_variable(qq, point, 2, 0))
    with pytest.raises(DivisionByZero):
        Jet.shifted_variable(qq, point, 3, 0).inverse()


def test_mismatched_points(qq):
    a = Jet.const(qq, (qq(1),), 2, 1)
    b = Jet.const(qq, (qq(2),), 2, 1)
    with pytest.raises(BadParameter):
        a + b


def test_expand_rational(qq):
    ring = PolynomialRing(qq, 2)
    f = RationalFunction(ring.one, ring.parse("x1 - x2"))
    jet = expand_to_jet(f, (qq(2), qq(1)), 2)
    assert jet.constant_term() == qq(1)
    assert jet.coefficient((1, 0)) == qq(-1)
    assert jet.coefficient((0, 1)) == qq(1)
    with pytest.raises(PoleAtPoint):
        expand_to_jet(f, (qq(1), qq(1)), 2)


def test_order_one_is_constant(qq):
    assert Jet.shifted_variable(qq, (qq(3),), 1, 0).is_zero()
    assert not Jet.const(qq, (qq(3),), 1, 5).is_zero()


@settings(derandomize=True, max_examples=30)
@given(
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(-1, 2)), st.integers(-3, 3), max_size=3),
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(-1, 2)), st.integers(-3, 3), max_size=3),
)
def test_jet_map_is_multiplicative(a, b):
    field = get_field(7)
    ring = PolynomialRing(field, 2)
    point = (field(2), field(3))
    f, g = ring.from_terms(a), ring.from_terms(b)
    assert poly_to_jet(f * g, point, 3) == poly_to_jet(f, point, 3) * poly_to_jet(g, point, 3)
    assert poly_to_jet(f + g, point, 3) == poly_to_jet(f, point, 3) + poly_to_jet(g, point, 3)
