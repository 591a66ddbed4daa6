import pytest

from shared.algebra.combinatorics import ColorSeq, Permutation
from shared.algebra.laurent import PolynomialRing
from shared.algebra.rational import RationalFunction
from shared.algebra.smash import PointBlock, SmashOperator, block_key


@pytest.fixture
def ring(qq):
    return PolynomialRing(qq, 2)


@pytest.fixture
def ops(ring):
    identity, s = Permutation.identity(2), Permutation.simple(2, 1)
    frac = RationalFunction(ring.one, ring.parse("x1 - x2"))
    one = SmashOperator.identity(ring, ["P"])
    swap = SmashOperator.single(ring, "P", "P", s, 1)
    dem = SmashOperator.single(ring, "P", "P", identity, frac) + SmashOperator.single(ring, "P", "P", s, -frac)
    return one, swap, dem


def test_demazure_as_smash_operator(ring, ops):
    one, swap, dem = ops
    assert dem.act({"P": ring.gen(1)})["P"].to_laurent() == ring.one
    assert (dem * dem).is_zero()
    assert swap * swap == one


def test_twisted_composition(ring, ops):
    one, swap, _ = ops
    x1 = SmashOperator.diagonal(ring, {"P": ring.gen(1)})
    x2 = SmashOperator.diagonal(ring, {"P": ring.gen(2)})
    assert swap * x1 == x2 * swap


def test_blocks_compose_only_when_matching(ring):
    identity = Permutation.identity(2)
    a_to_b = SmashOperator.single(ring, "B", "A", identity, 1)
    assert (a_to_b * a_to_b).is_zero()
    b_to_a = SmashOperator.single(ring, "A", "B", identity, 1)
    assert b_to_a * a_to_b == SmashOperator.identity(ring, ["A"])
    assert a_to_b.sources() == {"A"}
    assert a_to_b.targets() == {"B"}


def test_restrict_and_scale(ring):
    op = SmashOperator.identity(ring, ["A", "B"])
    assert op.restrict(sources=["A"]) == SmashOperator.identity(ring, ["A"])
    assert op.scale(0).is_zero()
    assert (op * 3).coefficient("A", "A", Permutation.identity(2)) == RationalFunction.const(ring, 3)


def test_laurent_preservation(ring, ops):
    _, swap, dem = ops
    probes = [ring.gen(1), ring.parse("x1^2*x2^-1")]
    assert dem.preserves_laurent(probes)
    half = SmashOperator.single(ring, "P", "P", Permutation.identity(2),
                                RationalFunction(ring.one, ring.parse("x1 - x2")))
    assert not half.preserves_laurent(probes)


def test_point_block_format(qq):
    block = PointBlock(ColorSeq.parse("rb"), (qq(1), qq(2)))
    assert block.format(qq.format) == "rb@[1,2]"
    assert block_key(ColorSeq.parse("rb")) == "rb"
