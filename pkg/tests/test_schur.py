import pytest

from shared.algebra.combinatorics import MultiComposition
from shared.algebra.errors import (
    BadParameter,
    BlockMismatch,
    CharacteristicTooSmall,
    InvalidCrossing,
    InvalidSplit,
    NotInvariant,
)
from shared.algebra.scalars import FieldConfig, validate_config
from products.workbench.algebras.schur import (
    SchurEngine,
    SchurGenSpec,
    all_generators,
    crossing_data,
    crossing_factor,
    hom_basis_check,
    intertwining_check,
    invariance_check,
    phi_check,
    schur_equal,
    split_data,
    verify_schur_identities,
)
from products.workbench.expressions import parse

COARSE = MultiComposition.parse("((2))")
FINE = MultiComposition.parse("((1,1))")
LEFT = MultiComposition.parse("((1)|())")
RIGHT = MultiComposition.parse("(()|(1))")


@pytest.fixture
def one_strand():
    return validate_config(FieldConfig(q=2, Q=(3,), d=1))


def test_split_and_crossing_data():
    data = split_data(COARSE, FINE)
    assert (data.a, data.b, data.offset) == (1, 1, 0)
    with pytest.raises(InvalidSplit):
        split_data(COARSE, COARSE)
    assert crossing_data(RIGHT, LEFT).t == 1
    with pytest.raises(InvalidCrossing):
        crossing_data(LEFT, RIGHT)


def test_gen_spec_orientation():
    spec = SchurGenSpec("MERGE", COARSE, FINE)
    assert spec.source == FINE
    assert spec.target == COARSE
    assert spec.label() == "merge((1,1))->((2))"
    with pytest.raises(BadParameter):
        SchurGenSpec("SPLIT", COARSE)


def test_merge_after_split(level_zero):
    for rep in ("standard", "modified"):
        engine = SchurEngine(level_zero, rep)
        composite = engine.merge(FINE, COARSE) * engine.split(COARSE, FINE)
        # ∂₁(x₂ − q x₁) = −(1 + q)
        assert composite.apply_laurent(engine.ring.one) == engine.ring.const(-3)
        assert schur_equal(composite, engine.e(COARSE).scale(-3))


def test_merge_is_demazure(level_zero):
    engine = SchurEngine(level_zero)
    merge = engine.merge(FINE, COARSE)
    assert merge.apply_laurent(engine.ring.gen(1)) == engine.ring.one


def test_poly_requires_invariance(level_zero):
    engine = SchurEngine(level_zero)
    with pytest.raises(NotInvariant):
        engine.poly(COARSE, engine.ring.gen(1))
    engine.poly(COARSE, engine.ring.parse("x1 + x2"))


def test_composition_shape_mismatch(level_zero):
    engine = SchurEngine(level_zero)
    with pytest.raises(BlockMismatch):
        engine.split(COARSE, FINE) * engine.split(COARSE, FINE)


def test_right_crossing_after_left(one_strand):
    engine = SchurEngine(one_strand)
    resolved = engine.right_crossing_convention()
    assert resolved["convention"] == "x-Q"
    assert resolved["rejected"] == ["Q-x"]
    value = (engine.rcross(LEFT, RIGHT) * engine.lcross(RIGHT, LEFT)).apply_laurent(engine.ring.one)
    assert value == engine.ring.parse("x1 - 3")


@pytest.mark.parametrize("convention, expected", [("x-Q", "x1 - 3"), ("Q-x", "3 - x1")])
def test_crossing_factor_candidates(one_strand, convention, expected):
    engine = SchurEngine(one_strand)
    data = crossing_data(RIGHT, LEFT)
    assert crossing_factor(engine.ring, engine.Q[0], data, convention) == engine.ring.parse(expected)


def test_right_crossing_resolved_at_level_two(config_qq):
    resolved = SchurEngine(config_qq).right_crossing_convention()
    assert resolved["convention"] == "x-Q"
    assert resolved["rejected"] == ["Q-x"]


def test_expression_interpretation(level_zero):
    engine = SchurEngine(level_zero)
    body = engine.evaluate(parse("merge(((1,1)) -> ((2)))*split(((2)) -> ((1,1)))"))
    assert body.apply(COARSE, engine.ring.one)[COARSE].to_laurent() == engine.ring.const(-3)


def test_characteristic_too_small():
    config = validate_config(FieldConfig(characteristic=3, q=2, Q=(1,), d=3))
    with pytest.raises(CharacteristicTooSmall):
        SchurEngine(config)


def test_generator_count(one_strand):
    kinds = sorted(spec.kind for spec in all_generators(1, 1))
    assert kinds == ["LCROSS", "RCROSS"]
    assert len(all_generators(2, 0)) == 2


def test_identities(level_zero):
    report = verify_schur_identities(level_zero)
    assert report.passed, report.failures[:3]
    assert report.results["m_d(1)"]


@pytest.mark.parametrize("fixture", ["level_zero", "one_strand", "level_one"])
def test_generator_suites(fixture, request):
    config = request.getfixturevalue(fixture)
    for suite in (phi_check, intertwining_check, invariance_check):
        report = suite(config)
        assert report.passed, (report.suite, report.failures[:3])


def test_split_sends_phi_image_to_phi_image(level_zero):
    engine = SchurEngine(level_zero, "standard")
    one = engine.ring.one
    image = engine.split(COARSE, FINE).apply_laurent(one)
    assert image == engine.ring.gen(2) - engine.ring.gen(1).scale(engine.q)
    assert engine.phi(COARSE, one).element == engine.phi(FINE, image).element
    report = phi_check(level_zero)
    ids = {c.check_id: c.passed for c in report.checks}
    assert ids["phi[split((2))->((1,1)),probe=0]"]
    assert ids["phi[merge((1,1))->((2)),probe=0]"]


def test_intertwining_records_modified_value(level_zero):
    report = intertwining_check(level_zero)
    assert report.results["modified_merge_split(1)"] == "-3"


def test_hom_basis(level_zero):
    report = hom_basis_check(level_zero, bound=1)
    assert report.passed, report.failures[:3]
    assert report.results["hom[lam=((2)),mu=((2))]"] > 0
