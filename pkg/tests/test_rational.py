import pytest

from shared.algebra.errors import DivisionByZero, NotLaurent
from shared.algebra.laurent import PolynomialRing
from shared.algebra.rational import RationalFunction, cancel


@pytest.fixture
def ring(qq):
    return PolynomialRing(qq, 2)


def test_cancel_common_factor(ring):
    num, den = cancel(ring.parse("x1^2 - x2^2"), ring.parse("x1 - x2"))
    assert den == ring.one
    assert num == ring.parse("x1 + x2")


def test_laurent_detection(ring):
    f = RationalFunction(ring.parse("x1^2 - x2^2"), ring.parse("x1 - x2"))
    assert f.is_laurent()
    assert f.to_laurent() == ring.parse("x1 + x2")
    g = RationalFunction(ring.one, ring.parse("x1 - x2"))
    assert not g.is_laurent()
    with pytest.raises(NotLaurent):
        g.to_laurent()


def test_monomial_denominator(ring):
    f = RationalFunction(ring.parse("x1 + x2"), ring.parse("2*x2"))
    assert f.to_laurent() == ring.parse("1/2*x1*x2^-1 + 1/2")


def test_zero_denominator(ring):
    with pytest.raises(DivisionByZero):
        RationalFunction(ring.one, ring.zero)
    with pytest.raises(DivisionByZero):
        RationalFunction.const(ring, 0).inverse()


def test_equality_is_cross_multiplication(ring):
    a = RationalFunction(ring.parse("x1"), ring.parse("x1 - x2"))
    b = RationalFunction(ring.parse("2*x1*x2"), ring.parse("2*x1*x2 - 2*x2^2"))
    assert a == b


def test_arithmetic_and_swap(ring):
    frac = RationalFunction(ring.gen(2), ring.parse("x1 - x2"))
    total = frac + frac.swap(1)
    # x2/(x1-x2) + x1/(x2-x1) = -1
    assert total == RationalFunction.const(ring, -1)


def test_evaluate_at_pole(ring, qq):
    f = RationalFunction(ring.one, ring.parse("x1 - x2"))
    assert f.evaluate([qq(3), qq(1)]) == qq(1) / qq(2)
    assert not f.is_regular_at([qq(2), qq(2)])
    with pytest.raises(DivisionByZero):
        f.evaluate([qq(2), qq(2)])


def test_format_reduced(ring):
    f = RationalFunction(ring.parse("x1^2 - x2^2"), ring.parse("x1 - x2"))
    assert f.format() == "x1 + x2"
