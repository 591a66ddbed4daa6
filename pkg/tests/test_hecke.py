import pytest

from shared.algebra.combinatorics import ColorSeq, Permutation
from shared.algebra.errors import ExpressionIndexError, IncompatibleSequences, IndexOutOfRange
from shared.algebra.scalars import FieldConfig, validate_config
from products.workbench.algebras.base import check_relation
from products.workbench.algebras.hecke import (
    HeckeAlgebra,
    HeckeGenSpec,
    NativeScalars,
    basis_roundtrip_check,
    center_check,
    embedding_check,
    laurent_check,
    presentation_relations,
    sharp_check,
    verify_presentation,
)
from products.workbench.expressions import parse


@pytest.fixture
def flat(level_zero):
    return HeckeAlgebra(level_zero)


@pytest.fixture
def one_red():
    return HeckeAlgebra(validate_config(FieldConfig(q=2, Q=(3,), d=1)))


def test_black_crossing_action(flat):
    ring = flat.ring
    # T1(1) = -1 e T1(x1) = -q x2
    images = flat.T(1).act({ColorSeq.omega(0, 2): ring.gen(1)})
    assert images[ColorSeq.omega(0, 2)].to_laurent() == ring.parse("-2*x2")
    images = flat.T(1).act({ColorSeq.omega(0, 2): ring.one})
    assert images[ColorSeq.omega(0, 2)].to_laurent() == -ring.one


def test_quadratic_relation(flat):
    T = flat.T(1)
    assert ((T + flat.one()) * (T - flat.one().scale(flat.q))).is_zero()


def test_red_black_quadratic(one_red):
    rb = ColorSeq.parse("rb")
    T = one_red.T(1)
    lhs = T * T * one_red.e(rb)
    assert lhs == one_red.poly(one_red.ring.parse("x1 - 3"), rb)


def test_red_positions_kill_X(one_red):
    rb = ColorSeq.parse("rb")
    assert (one_red.X(1) * one_red.e(rb)).is_zero()
    assert not (one_red.X(2) * one_red.e(rb)).is_zero()


def test_generator_specs(one_red):
    assert one_red.generator(HeckeGenSpec("E")) == one_red.one()
    assert one_red.generator(HeckeGenSpec("T", 1)) == one_red.T(1)
    with pytest.raises(IndexOutOfRange):
        one_red.generator(HeckeGenSpec("T", 2))
    with pytest.raises(IndexOutOfRange):
        one_red.generator(HeckeGenSpec("Z"))


def test_expression_index_errors(one_red):
    with pytest.raises(ExpressionIndexError) as exc:
        one_red.evaluate(parse("T1*T4"))
    assert exc.value.position == 3
    with pytest.raises(ExpressionIndexError):
        one_red.evaluate(parse("e(rbb)"))


def test_normal_form_of_T_squared(flat):
    omega = ColorSeq.omega(0, 2)
    s, identity = Permutation.simple(2, 1), Permutation.identity(2)
    decomposition = flat.to_basis(flat.evaluate(parse("T1*T1")))
    assert decomposition == {
        (omega, omega, s, (0, 0)): flat.field(1),
        (omega, omega, identity, (0, 0)): flat.field(2),
    }
    rows = flat.basis_to_json(decomposition)
    assert [r["perm"] for r in rows] == ["[1,2]", "[2,1]"]
    assert rows[1]["coeff"] == "1"


def test_basis_roundtrip(one_red):
    op = one_red.evaluate(parse("T1*X2*T1 + 3*Xi2"))
    assert one_red.from_basis(one_red.to_basis(op)) == op


def test_canonical_basis_rejects_other_orbits(one_red):
    with pytest.raises(IncompatibleSequences):
        one_red.canonical_Twbc(ColorSeq.parse("rb"), ColorSeq.parse("rr"), Permutation.identity(1))


def test_relation_table_contents():
    ids = {rel.check_id for rel in presentation_relations(2, 1, ["3"])}
    assert "idempotent_sum" in ids
    assert "orthogonal[b=rbb,c=brb]" in ids
    assert "quadratic[c=brb,r=1]" in ids
    assert "braid[c=brb,r=1]" in ids
    assert "T_red_red[c=rbb,r=1]" not in ids


def test_single_relation(one_red):
    rel = next(r for r in one_red.relations() if r.check_id == "quadratic[c=br,r=1]")
    assert check_relation(rel, NativeScalars(one_red)).passed


@pytest.mark.parametrize("fixture", ["level_zero", "level_one", "config_f7"])
def test_presentation_holds(fixture, request):
    config = request.getfixturevalue(fixture)
    report = verify_presentation(config)
    assert report.passed, report.failures[:3]


def test_center_and_sharp(level_one):
    assert center_check(level_one).passed
    assert sharp_check(level_one).passed


def test_embedding_and_laurent(level_one):
    assert embedding_check(level_one).passed
    assert laurent_check(level_one, seed=1, words=5).passed


def test_basis_roundtrip_suite(config_f7):
    report = basis_roundtrip_check(config_f7, seed=3, words=10, max_length=4)
    assert report.passed, report.failures[:3]
    assert len(report.checks) == 10
