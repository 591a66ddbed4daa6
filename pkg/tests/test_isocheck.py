import pytest

from shared.algebra.combinatorics import ColorSeq
from shared.algebra.errors import BadParameter, PoleAtPoint
from shared.algebra.laurent import PolynomialRing
from shared.algebra.rational import RationalFunction
from shared.algebra.smash import PointBlock, SmashOperator
from products.workbench.algebras.hecke import HeckeAlgebra
from products.workbench.algebras.isocheck import (
    BlockGenSpec,
    CompletedSmashOperator,
    HeckeKLRIso,
    IsoDirection,
    SchurQSchurIso,
    complete,
    iso_generator_image,
    monomial_exponents,
    orbit_points,
    parse_direction,
    refine,
    shifted_monomial,
    verify_iso,
)


@pytest.fixture
def line(qq):
    ring = PolynomialRing(qq, 1, "x")
    block = PointBlock(ColorSeq.parse("b"), (qq(2),))
    return ring, block


def test_orbit_points(qq):
    assert orbit_points((qq(2), qq(1)), qq) == [(qq(1), qq(2)), (qq(2), qq(1))]
    assert orbit_points((qq(2), qq(2)), qq) == [(qq(2), qq(2))]


def test_parse_direction():
    assert parse_direction("hecke-klr") == (IsoDirection.KLR_TO_HECKE, IsoDirection.HECKE_TO_KLR)
    assert parse_direction("qschur->schur") == (IsoDirection.QSCHUR_TO_SCHUR,)
    assert IsoDirection.SCHUR_TO_QSCHUR.is_schur
    assert not IsoDirection.KLR_TO_HECKE.is_schur
    with pytest.raises(BadParameter):
        parse_direction("hecke->schur")


def test_monomial_basis(qq):
    assert monomial_exponents(2, 2) == [(0, 0), (0, 1), (1, 0)]
    assert len(monomial_exponents(2, 3)) == 6
    ring = PolynomialRing(qq, 2, "x")
    assert shifted_monomial(ring, (qq(1), qq(2)), (1, 1)) == ring.parse("x1*x2 - 2*x1 - x2 + 2")


def test_completed_equality_is_truncated(line):
    ring, block = line
    x = ring.gen(1)
    near = x + (x - 2) ** 2
    a = SmashOperator.diagonal(ring, {block: x})
    b = SmashOperator.diagonal(ring, {block: near})
    assert CompletedSmashOperator(a, 2) == CompletedSmashOperator(b, 2)
    witness = CompletedSmashOperator(a, 3).difference(CompletedSmashOperator(b, 3))
    assert witness is not None
    assert set(witness) == {"block", "input", "order", "lhs", "rhs"}


def test_completed_order_and_poles(line):
    ring, block = line
    identity = SmashOperator.identity(ring, [block])
    with pytest.raises(BadParameter):
        CompletedSmashOperator(identity, 0)
    pole = SmashOperator.diagonal(ring, {block: RationalFunction(ring.one, ring.gen(1) - 2)})
    with pytest.raises(PoleAtPoint):
        CompletedSmashOperator(pole, 2).matrix()
    # 1/x é regular em 2
    regular = SmashOperator.diagonal(ring, {block: RationalFunction(ring.one, ring.gen(1))})
    product = CompletedSmashOperator(regular, 2) * CompletedSmashOperator(SmashOperator.diagonal(ring, {block: ring.gen(1)}), 2)
    assert product == CompletedSmashOperator(identity, 2)


def test_refine_by_orbit(level_zero, qq):
    algebra = HeckeAlgebra(level_zero)
    c = ColorSeq.parse("bb")
    refined = refine(algebra.T(1, c), orbit_points((qq(1), qq(2)), qq))
    assert refined.sources() == {PointBlock(c, (qq(1), qq(2))), PointBlock(c, (qq(2), qq(1)))}
    with pytest.raises(BadParameter):
        complete(algebra.T(1, c), 2)
    assert complete(algebra.T(1, c), 2, point=(qq(1), qq(2))).order == 2


def test_generator_image_direction_mismatch(level_zero):
    iso = HeckeKLRIso(level_zero, (1, 2))
    seq = iso.klr.sequences[0]
    image = iso_generator_image(BlockGenSpec("E", seq), IsoDirection.KLR_TO_HECKE, level_zero, (1, 2))
    assert image.order == 2
    with pytest.raises(BadParameter):
        iso_generator_image(BlockGenSpec("PSI", seq, 1), IsoDirection.HECKE_TO_KLR, level_zero, (1, 2))


def test_iso_rejects_order_zero(level_zero):
    with pytest.raises(BadParameter):
        HeckeKLRIso(level_zero, (1, 2), order=0)


@pytest.mark.parametrize("direction", [IsoDirection.KLR_TO_HECKE, IsoDirection.HECKE_TO_KLR])
def test_hecke_klr_level_zero(level_zero, direction):
    report = verify_iso(direction, level_zero, (1, 2), order=2, words=2)
    assert report.passed, report.failures[:3]
    assert all(report.results["orders"].values())
    assert report.conventions["variables"] == "-i_k*y_k = x_k - i_k"


@pytest.mark.parametrize("direction", [IsoDirection.KLR_TO_HECKE, IsoDirection.HECKE_TO_KLR])
def test_hecke_klr_level_one(level_one, direction):
    report = verify_iso(direction, level_one, (3,), order=2, words=2)
    assert report.passed, report.failures[:3]
    assert len(report.results["blocks"]) == 2


@pytest.mark.parametrize("direction", [IsoDirection.QSCHUR_TO_SCHUR, IsoDirection.SCHUR_TO_QSCHUR])
def test_schur_qschur(level_zero, direction):
    report = verify_iso(direction, level_zero, (1, 2), order=2)
    assert report.passed, report.failures[:3]
    assert report.conventions["schur_representation"] == "modified"
    assert report.results["units"]


def test_schur_composite_restricted_to_intermediate_block(level_zero):
    iso = SchurQSchurIso(level_zero, (1, 2), order=2)
    label, second, first = next(c for c in iso.composites() if c[0].startswith("merge_split"))
    a, b = iso.pair(second), iso.pair(first)
    assert a.source == b.target
    result = iso.compare("composite", a.schur * b.schur, a.image() * b.image(), b.source, a.target)
    assert result.passed, result.witness

    report = verify_iso(IsoDirection.SCHUR_TO_QSCHUR, level_zero, (1, 2), order=2)
    checks = {c.check_id: c.passed for c in report.checks}
    assert checks[f"relations.{label}"]
    assert label == "merge_split[((2))->((1,1))@1,2]"


@pytest.mark.parametrize("direction", [IsoDirection.QSCHUR_TO_SCHUR, IsoDirection.SCHUR_TO_QSCHUR])
def test_schur_qschur_level_two(config_qq, direction):
    report = verify_iso(direction, config_qq, (3,), order=2)
    assert report.passed, report.failures[:3]
    assert len(report.results["blocks"]) == 3
