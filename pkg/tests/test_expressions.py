import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.combinatorics import Permutation
from shared.algebra.errors import ExpressionIndexError, ExpressionSyntaxError
from shared.algebra.laurent import PolynomialRing
from shared.algebra.smash import SmashOperator
from products.workbench.expressions import (
    Gen,
    Product,
    Scalar,
    Sum,
    check_index,
    evaluate,
    generators_in,
    parse,
    to_text,
    words,
)


def test_parse_structure():
    expr = parse("T1*X2 + 3*x1")
    assert isinstance(expr, Sum)
    first, second = expr.terms
    assert first == Product((Gen("T", 1), Gen("X", 2)))
    assert second == Product((Scalar("3"), Gen("x", 1)))


def test_bracketed_and_arrowed():
    assert parse("e(rbb)") == Gen("e", None, ("rbb",))
    assert parse("split((1,1) -> (2))") == Gen("split", None, ("(1,1)", "(2)"))
    assert parse("Xi2") == Gen("Xi", 2)


def test_subtraction_negates():
    expr = parse("T1 - 2")
    assert expr == Sum((Gen("T", 1), Scalar("-2")))
    assert parse("T1 - T2").terms[1] == Product((Scalar("-1"), Gen("T", 2)))


@pytest.mark.parametrize("src", [
    "T1*(X1 + X2)",
    "e(rb)*psi1*y2",
    "3/2*T1 + -1*X1",
    "merge((1)|(1) -> (2)|())",
])
def test_text_round_trip(src):
    expr = parse(src)
    assert parse(to_text(expr)) == expr


@pytest.mark.parametrize("src, position", [
    ("T1 + ", 5),
    ("T1 + Q2", 5),
    ("T", 1),
    ("T1 T2", 3),
    ("split(a)", 0),
    ("(T1", 3),
])
def test_syntax_error_positions(src, position):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse(src)
    assert exc.value.position == position


def test_check_index_reports_span():
    expr = parse("T1*T5")
    node = generators_in(expr)[1]
    assert check_index(generators_in(expr)[0], 1, 3) == 1
    with pytest.raises(ExpressionIndexError) as exc:
        check_index(node, 1, 3)
    assert exc.value.position == 3


def test_words_expansion():
    expr = parse("2*(T1 + X1)*T2")
    assert words(expr) == [
        (("2",), (Gen("T", 1), Gen("T", 2))),
        (("2",), (Gen("X", 1), Gen("T", 2))),
    ]


class SwapInterpretation:
    """T1 age como s1 num único bloco de k(x1, x2)"""

    def __init__(self, field):
        self.field = field
        self.ring = PolynomialRing(field, 2)

    def one(self):
        return SmashOperator.identity(self.ring, ["P"])

    def scalar(self, value):
        return self.field(value)

    def generator(self, node):
        check_index(node, 1, 1)
        return SmashOperator.single(self.ring, "P", "P", Permutation.simple(2, 1), 1)

    def coefficient(self, node):
        raise NotImplementedError


def test_evaluate_with_interpretation(qq):
    interp = SwapInterpretation(qq)
    assert evaluate(parse("T1*T1"), interp) == interp.one()
    assert evaluate(parse("2 - 2"), interp).is_zero()
    double = evaluate(parse("3*T1 + -1*T1"), interp)
    assert double == evaluate(parse("2*T1"), interp)


@settings(derandomize=True, max_examples=40)
@given(st.lists(st.tuples(st.sampled_from(["T", "X", "x", "Xi"]), st.integers(1, 4)), min_size=1, max_size=4))
def test_products_round_trip(factors):
    src = "*".join(f"{name}{index}" for name, index in factors)
    assert to_text(parse(src)) == src
