import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.errors import DivisionByZero, ExpressionSyntaxError
from shared.algebra.laurent import PolynomialRing, elementary_symmetric
from shared.algebra.scalars import get_field


@pytest.fixture
def ring(qq):
    return PolynomialRing(qq, 3, "x")


def test_parse_and_format(ring):
    f = ring.parse("x1^2 - 3*x2 + 1")
    assert f.format() == "x1^2 - 3*x2 + 1"
    assert ring.parse("x1^-1").format() == "x1^-1"


def test_parse_rejects_wrong_prefix(ring):
    with pytest.raises(ExpressionSyntaxError) as exc:
        ring.parse("y1 + x2")
    assert exc.value.position == 0


def test_parse_trailing_text_position(ring):
    with pytest.raises(ExpressionSyntaxError) as exc:
        ring.parse("x1 x2")
    assert exc.value.position == 3


def test_negative_power_of_binomial(ring):
    with pytest.raises(DivisionByZero):
        (ring.gen(1) + ring.gen(2)) ** -1


def test_laurent_monomial_inverse(ring):
    x1 = ring.gen(1)
    assert x1 * x1 ** -1 == ring.one
    assert (ring.parse("2*x1") ** -2).format() == "1/4*x1^-2"


def test_swap_and_permute(ring):
    f = ring.parse("x1^2*x3")
    assert f.swap(1) == ring.parse("x2^2*x3")
    # x1 -> x2, x2 -> x3, x3 -> x1
    assert f.permute([1, 2, 0]) == ring.parse("x2^2*x1")


def test_elementary_symmetric(ring):
    assert elementary_symmetric(ring, 2) == ring.parse("x1*x2 + x1*x3 + x2*x3")
    assert elementary_symmetric(ring, 1, [2, 3]) == ring.parse("x2 + x3")


def test_evaluate_and_substitute(ring, qq):
    f = ring.parse("x1*x2^-1 + 3")
    assert f.evaluate([qq(4), qq(2), qq(1)]) == qq(5)
    g = f.substitute([ring.gen(2), ring.gen(1), ring.gen(3)])
    assert g == ring.parse("x2*x1^-1 + 3")


def test_rename_and_embed(ring, qq):
    small = PolynomialRing(qq, 2, "y")
    f = small.parse("y1 - y2^2")
    assert f.embed(ring, [2, 0]) == ring.parse("x3 - x1^2")
    assert f.rename(small.with_prefix("z")).format() == "-z2^2 + z1"


def test_f7_coefficients_wrap():
    ring = PolynomialRing(get_field(7), 1)
    assert ring.parse("8*x1 + 7") == ring.gen(1)


exponents = st.lists(st.integers(min_value=-2, max_value=2), min_size=2, max_size=2)
polys = st.dictionaries(exponents.map(tuple), st.integers(min_value=-3, max_value=3), max_size=4)


@settings(derandomize=True, max_examples=40)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    ring = PolynomialRing(get_field(0), 2)
    f, g, h = ring.from_terms(a), ring.from_terms(b), ring.from_terms(c)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == ring.zero


@settings(derandomize=True, max_examples=40)
@given(polys)
def test_format_parse_identity(a):
    ring = PolynomialRing(get_field(0), 2)
    f = ring.from_terms(a)
    assert ring.parse(f.format()) == f
