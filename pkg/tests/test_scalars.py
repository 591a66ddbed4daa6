from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.errors import BadParameter, DivisionByZero, NonPrimeCharacteristic, WorkbenchError
from shared.algebra.scalars import FieldConfig, get_field, validate_config


def test_parse_fraction_qq(qq):
    assert qq.format(qq.parse("6/4")) == "3/2"
    assert qq.format(qq("-3")) == "-3"


def test_parse_in_f7_reduces(f7):
    assert f7.format(f7.parse("1/2")) == "4"
    assert f7.key(f7(-1)) == (6, 1)


def test_invalid_scalar_text(qq):
    with pytest.raises(BadParameter):
        qq.parse("abc")


def test_division_by_zero(qq, f7):
    with pytest.raises(DivisionByZero):
        qq.div(qq(1), qq(0))
    with pytest.raises(DivisionByZero):
        f7.inv(f7(7))


def test_non_prime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        get_field(6)


def test_errors_are_value_errors():
    assert issubclass(BadParameter, WorkbenchError)
    assert issubclass(WorkbenchError, ValueError)


def test_multiplicative_order(qq, f7):
    assert qq.order(qq(2)) is None
    assert qq.order(qq(-1)) == 2
    assert f7.order(f7(2)) == 3
    assert f7.order(f7(3)) == 6


def test_validate_rejects_degenerate_q():
    with pytest.raises(BadParameter):
        validate_config(FieldConfig(q=1, Q=(3,)))
    with pytest.raises(BadParameter):
        validate_config(FieldConfig(q=0, Q=(3,)))


def test_validate_rejects_zero_Q():
    with pytest.raises(BadParameter):
        validate_config(FieldConfig(q=2, Q=(3, 0)))


def test_validate_level_bounds():
    with pytest.raises(BadParameter):
        validate_config(FieldConfig(q=2, Q=(3,), level=2))
    cfg = validate_config(FieldConfig(q=2, Q="3,5", level=1))
    assert cfg.level == 1
    assert len(cfg.Q) == 1


def test_echo_and_order(config_f7):
    echo = config_f7.echo()
    assert echo == {"char": 7, "q": "2", "Q": ["1", "3"], "d": 2, "level": 2, "order_q": 3}


def test_inverted_config(config_qq):
    inv = config_qq.inverted()
    assert [config_qq.field.format(x) for x in inv.Q] == ["1/3", "1/5"]


@settings(derandomize=True, max_examples=50)
@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_field_matches_fractions(a, b):
    qq = get_field(0)
    x, y = qq(a), qq(b)
    assert qq.key(x + y) == ((a + b).numerator, (a + b).denominator)
    assert qq.key(x * y) == ((a * b).numerator, (a * b).denominator)
    if b:
        c = a / b
        assert qq.key(qq.div(x, y)) == (c.numerator, c.denominator)


@settings(derandomize=True, max_examples=50)
@given(st.integers(min_value=1, max_value=100))
def test_f7_inverse(n):
    f7 = get_field(7)
    a = f7(n)
    if a:
        assert f7.mul(a, f7.inv(a)) == f7.one


def test_fraction_coercion(qq):
    assert qq.format(qq(Fraction(2, 6))) == "1/3"
