import pytest

from shared.algebra.errors import BadParameter, WindowNotStabilized
from shared.algebra.scalars import FieldConfig, validate_config
from products.workbench.algebras.cyclotomic import (
    CyclotomicKind,
    box,
    cyclotomic_ideal_window,
    cyclotomic_quotient,
    eigenvalue_check,
)


def _config(Q: tuple, d: int):
    return validate_config(FieldConfig(q=2, Q=Q, d=d))


def test_box_order():
    assert box(1, 1) == [(0,), (-1,), (1,)]
    assert len(box(2, 2)) == 25
    assert box(2, 1)[0] == (0, 0)


@pytest.mark.parametrize(
    "Q, d, expected",
    [((3,), 1, 1), ((3, 5), 1, 2), ((3,), 2, 2), ((3, 5), 2, 8)],
)
def test_classical_dimensions(Q, d, expected):
    dimension, report = cyclotomic_ideal_window(CyclotomicKind.CLASSICAL, _config(Q, d), window=3)
    assert dimension == expected
    assert report.passed
    assert report.results["stabilized"]
    assert report.results["previous_dimension"] == expected


def test_higher_level_corner_matches_classical():
    dimension, report = cyclotomic_ideal_window(CyclotomicKind.HIGHER, _config((3,), 1), window=2)
    assert dimension == 1
    assert report.results["corner"] == "rb"
    assert "full" in report.results


def test_quotient_basis_size():
    quotient = cyclotomic_quotient(CyclotomicKind.CLASSICAL, _config((3, 5), 1), window=2)
    assert len(quotient.basis_keys) == quotient.dimension == 2
    assert quotient.current.window_dimension == 5


def test_bad_windows_and_levels(level_zero):
    with pytest.raises(BadParameter):
        cyclotomic_quotient(CyclotomicKind.CLASSICAL, _config((3,), 1), window=0)
    with pytest.raises(BadParameter):
        cyclotomic_quotient(CyclotomicKind.CLASSICAL, level_zero)
    with pytest.raises(BadParameter):
        cyclotomic_quotient(CyclotomicKind.HIGHER, level_zero)


def test_eigenvalues_are_parameters():
    report = eigenvalue_check(_config((3, 5), 1))
    assert report.passed, report.failures[:3]
    assert report.results["eigenvalues"]["x1"] == ["3", "5"]
    assert report.results["dimension"] == 2


def test_window_below_seed_degree_does_not_stabilize():
    # (X₁ − 3)(X₁ − 5) tem grau 2: em B = 1 a semente sai da janela
    with pytest.raises(WindowNotStabilized, match="3 → 2"):
        cyclotomic_ideal_window(CyclotomicKind.CLASSICAL, _config((3, 5), 1), window=2)
    with pytest.raises(WindowNotStabilized):
        eigenvalue_check(_config((3, 5), 1), window=2)


def test_eigenvalues_two_strands_level_two():
    report = eigenvalue_check(_config((3, 5), 2))
    assert report.passed, report.failures[:3]
    assert report.results["dimension"] == 8
