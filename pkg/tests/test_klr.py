import pytest

from shared.algebra.errors import ExpressionIndexError, LabelOutsideF
from products.workbench.algebras.klr import (
    ColoredLabelSeq,
    KLRAlgebra,
    KLRGenSpec,
    build_quiver,
    default_labels,
    discrete_log,
    reduction_check,
    KLRConventions,
    klr_relations,
    resolve_conventions,
    structure_check,
    verify_klr_relations,
)
from products.workbench.expressions import parse


def test_discrete_log(qq, f7):
    assert discrete_log(qq, qq(2), qq(8), None) == 3
    assert discrete_log(qq, qq(2), qq(1) / qq(4), None) == -2
    assert discrete_log(qq, qq(2), qq(3), None) is None
    assert discrete_log(f7, f7(2), f7(4), 3) == 2
    assert discrete_log(f7, f7(2), f7(3), 3) is None


def test_chain_quiver(config_qq):
    quiver = build_quiver(config_qq)
    field = config_qq.field
    assert quiver.h(field(3), field(6)) == 1
    assert quiver.h(field(6), field(3)) == 0
    assert quiver.locate(field(12)) == (1, 2)
    assert quiver.locate(field(5)) == (2, 0)
    assert not quiver.is_vertex(field(7))
    assert quiver.describe() == {"type": "chain", "e": None, "orbits": [["3"], ["5"]]}


def test_cyclic_quiver(config_f7):
    quiver = build_quiver(config_f7)
    assert quiver.describe() == {"type": "cycle", "e": 3, "orbits": [["1", "2", "4"], ["3", "6", "5"]]}
    assert len(quiver.vertices()) == 6


def test_label_outside_vertex_set(config_qq):
    with pytest.raises(LabelOutsideF):
        KLRAlgebra(config_qq, (config_qq.field(7),))


def test_default_labels(config_qq, level_zero):
    field = config_qq.field
    assert default_labels(config_qq) == (field(3), field(6))
    assert default_labels(level_zero) == (field(1), field(2))


def test_sequences_and_parsing(level_one):
    algebra = KLRAlgebra(level_one)
    assert len(algebra.sequences) == 6
    seq = ColoredLabelSeq.parse("r(3) b(6) b(3)", algebra.field)
    assert seq in algebra.sequences
    assert seq.format() == "r(3) b(6) b(3)"
    assert seq.black_labels() == (algebra.field(6), algebra.field(3))
    with pytest.raises(ExpressionIndexError):
        algebra.evaluate(parse("e(r(3) b(6) b(6))"))


def test_equal_labels_nil_hecke(level_zero):
    field = level_zero.field
    algebra = KLRAlgebra(level_zero, (field(1), field(1)))
    psi = algebra.psi(1)
    assert (psi * psi).is_zero()
    ring = algebra.ring
    seq = algebra.sequences[0]
    # ψ₁ = ∂₁ nos rótulos iguais
    assert psi.act({seq: ring.gen(1)})[seq].to_laurent() == ring.one


def test_red_crossing_with_matching_label(level_one):
    algebra = KLRAlgebra(level_one)
    field = algebra.field
    bjr = ColoredLabelSeq.parse("b(3) r(3) b(6)", field)
    twice = algebra.psi(1) * algebra.psi(1) * algebra.e(bjr)
    assert twice == algebra.poly(algebra.ring.gen(1), bjr)


def test_generator_spec(level_one):
    algebra = KLRAlgebra(level_one)
    assert algebra.generator(KLRGenSpec("E")) == algebra.one()
    assert algebra.generator(KLRGenSpec("Y", 1)).is_zero() is False


def test_conventions_resolve(level_one):
    algebra = KLRAlgebra(level_one)
    conventions, status = resolve_conventions(algebra)
    assert status["orientation"]
    assert conventions.to_dict()["P_ij"] == "(u - v)^h_ij"


@pytest.mark.parametrize("fixture", ["level_zero", "level_one", "config_qq", "config_f7"])
def test_relations_hold(fixture, request):
    config = request.getfixturevalue(fixture)
    report = verify_klr_relations(config)
    assert report.passed, report.failures[:3]
    assert report.results["quiver"]["type"] in ("chain", "cycle")


def test_reduction_and_structure(level_one):
    assert reduction_check(level_one).passed
    assert structure_check(level_one, seed=2, words=5).passed


@pytest.mark.parametrize("fixture", ["config_qq", "config_f7"])
def test_red_pairs_only_vanish(fixture, request):
    algebra = KLRAlgebra(request.getfixturevalue(fixture))
    ids = {rel.check_id for rel in klr_relations(algebra, KLRConventions())}
    seq = next(s for s in algebra.sequences if s.is_red(0) and s.is_red(1))
    red_pair = f"i={seq.format()},r=1"
    assert f"psi_red_red[{red_pair}]" in ids
    assert f"psi_moves_e[{red_pair}]" not in ids
    assert any(i.startswith("psi_moves_e[") for i in ids)
