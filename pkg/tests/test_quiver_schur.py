import pytest

from shared.algebra.combinatorics import MultiComposition, Permutation
from shared.algebra.errors import BlockMismatch, LabelOutsideF, NotInvariant, ShapeMismatch
from products.workbench.algebras.quiver_schur import (
    QSGenSpec,
    QSIndex,
    QuiverSchurEngine,
    canonical_labels,
    qs_equal,
    reindex_permutation,
    stabilizer,
    verify_quiver_schur,
)

COARSE = MultiComposition.of((2,))
FINE = MultiComposition.of((1, 1))
LEFT = MultiComposition.parse("((1)|())")
RIGHT = MultiComposition.parse("(()|(1))")


def test_index_parsing(qq):
    index = QSIndex.parse("((1)|(1)) @ [3,6]", qq)
    assert index.lam == MultiComposition.parse("((1)|(1))")
    assert index.labels == (qq(3), qq(6))
    assert QSIndex.parse(index.format(), qq) == index
    with pytest.raises(ShapeMismatch):
        QSIndex.parse("((2)) @ [3]", qq)


def test_canonical_representatives(qq):
    assert canonical_labels(COARSE, (qq(6), qq(3)), qq) == (qq(3), qq(6))
    assert canonical_labels(FINE, (qq(6), qq(3)), qq) == (qq(6), qq(3))
    w = reindex_permutation(COARSE, (qq(6), qq(3)), (qq(3), qq(6)))
    assert w == Permutation((1, 0))
    with pytest.raises(ShapeMismatch):
        reindex_permutation(FINE, (qq(6), qq(3)), (qq(3), qq(6)))
    assert len(stabilizer(COARSE, (qq(2), qq(2)))) == 2
    assert len(stabilizer(COARSE, (qq(1), qq(2)))) == 1


def test_blocks(level_zero):
    engine = QuiverSchurEngine(level_zero, (1, 2))
    # ((2)) tem uma órbita; ((1,1)) tem duas
    assert len(engine.blocks) == 3
    assert len(QuiverSchurEngine(level_zero, (2, 2)).blocks) == 2


def test_labels_must_be_vertices(level_zero):
    with pytest.raises(LabelOutsideF):
        QuiverSchurEngine(level_zero, (3, 6))


def test_canonical_rejects_foreign_labels(level_zero, qq):
    engine = QuiverSchurEngine(level_zero, (1, 2))
    with pytest.raises(ShapeMismatch):
        engine.canonical(COARSE, (qq(1), qq(4)))
    with pytest.raises(ShapeMismatch):
        engine.e(QSIndex(COARSE, (qq(2), qq(1))))


def test_euler_class_follows_arrows(level_zero, qq):
    engine = QuiverSchurEngine(level_zero, (1, 2))
    ring = engine.ring
    assert engine.euler_class(QSGenSpec("MERGE", COARSE, (qq(1), qq(2)), FINE)) == ring.parse("y1 - y2")
    assert engine.euler_class(QSGenSpec("MERGE", COARSE, (qq(2), qq(1)), FINE)) == ring.one


def test_merge_equal_labels_is_demazure(level_zero):
    engine = QuiverSchurEngine(level_zero, (2, 2))
    merge = engine.generator(QSGenSpec("MERGE", COARSE, (2, 2), FINE))
    assert merge.apply(engine.ring.gen(1)).to_laurent() == engine.ring.one


def test_merge_independent_of_representative(level_zero):
    engine = QuiverSchurEngine(level_zero, (1, 2))
    a = engine.generator(QSGenSpec("MERGE", COARSE, (1, 2), FINE))
    b = engine.generator(QSGenSpec("MERGE", COARSE, (2, 1), FINE))
    assert a.target == b.target
    assert a.source != b.source


def test_poly_requires_stabilizer_invariance(level_zero):
    engine = QuiverSchurEngine(level_zero, (2, 2))
    with pytest.raises(NotInvariant):
        engine.generator(QSGenSpec("POLY", COARSE, (2, 2), poly=engine.ring.gen(1)))
    other = QuiverSchurEngine(level_zero, (1, 2))
    op = other.generator(QSGenSpec("POLY", COARSE, (1, 2), poly=other.ring.gen(1)))
    assert op.apply(other.ring.one).to_laurent() == other.ring.gen(1)


def test_crossings_dot_matching_label(level_one):
    engine = QuiverSchurEngine(level_one, (3,))
    left = engine.generator(QSGenSpec("LCROSS", RIGHT, (3,), LEFT))
    right = engine.generator(QSGenSpec("RCROSS", RIGHT, (3,), LEFT))
    assert (right * left).apply(engine.ring.one).to_laurent() == engine.ring.gen(1)
    with pytest.raises(BlockMismatch):
        left * left
    assert qs_equal(left * engine.e(left.source), left)


def test_generator_shape_errors(level_zero):
    engine = QuiverSchurEngine(level_zero, (1, 2))
    with pytest.raises(ShapeMismatch):
        engine.generator(QSGenSpec("SPLIT", COARSE, (1, 2), COARSE))
    with pytest.raises(ShapeMismatch):
        engine.generator(QSGenSpec("MERGE", COARSE, (1, 2), COARSE))


@pytest.mark.parametrize("nu", [(1, 2), (2, 2), (2, 1)])
def test_suite_level_zero(level_zero, nu):
    report = verify_quiver_schur(level_zero, nu)
    assert report.passed, report.failures[:3]
    assert report.conventions["klr_sandwich"] in ("psi", "(-1)^h psi")


def test_suite_level_one(level_one):
    report = verify_quiver_schur(level_one, (3,))
    assert report.passed, report.failures[:3]
    assert report.results["blocks"] == 2
    assert report.conventions["klr_sandwich"] == "n/a"


def test_suite_cyclic_quiver(config_f7):
    report = verify_quiver_schur(config_f7.with_level(1), (1, 2))
    assert report.passed, report.failures[:3]
    assert report.results["quiver"]["type"] == "cycle"
