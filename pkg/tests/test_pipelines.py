import pytest

from shared.algebra.errors import BadParameter
from products.workbench.pipelines import verify_suites
from products.workbench.pipelines.verify_suites import SUITE_NAMES, SuiteOptions, run_suites, suite_jobs


def _labels(suite, config, **options):
    return [label for label, _ in suite_jobs(suite, config, SuiteOptions(**options))]


def test_jobs_per_suite(level_zero, level_one):
    assert "hecke.embedding" not in _labels("hecke", level_zero)
    assert "hecke.embedding" in _labels("hecke", level_one)
    assert "klr.reduction" not in _labels("klr", level_zero)
    assert _labels("schur", level_one)[0] == "schur.identities"
    assert _labels("cyclotomic", level_one) == [
        "cyclotomic.classical", "cyclotomic.higher-level", "cyclotomic.eigenvalues",
    ]


def test_iso_side_selects_directions(level_one):
    assert _labels("iso", level_one) == ["iso.klr->hecke", "iso.hecke->klr"]
    assert _labels("iso", level_one, side="schur->qschur") == ["iso.schur->qschur"]
    with pytest.raises(BadParameter):
        _labels("iso", level_one, side="schur")


def test_all_covers_every_suite(level_one):
    prefixes = {label.split(".")[0] for label in _labels("all", level_one)}
    assert prefixes == set(SUITE_NAMES)


def test_unknown_suite(level_one):
    with pytest.raises(BadParameter):
        suite_jobs("braid", level_one, SuiteOptions())


def test_run_single_job_keeps_report(level_one):
    report = run_suites("qschur", level_one, SuiteOptions(point=(3,)))
    assert report.suite == "qschur.generators"
    assert report.passed, report.failures[:3]


def test_run_merges_reports(level_zero):
    report = run_suites("hecke", level_zero, SuiteOptions(seed=1))
    assert report.suite == "hecke"
    assert report.passed, report.failures[:3]
    ids = [c.check_id for c in report.checks]
    assert ids == sorted(ids)
    assert any(i.startswith("hecke.presentation/") for i in ids)


def test_workers_dispatch_to_flow(level_one, monkeypatch):
    calls = []

    def fake_flow(jobs):
        calls.append([label for label, _ in jobs])
        return [job() for _, job in jobs]

    monkeypatch.setattr(verify_suites, "verify_flow", fake_flow)
    report = run_suites("qschur", level_one, SuiteOptions(point=(3,)), workers=2)
    assert calls == [["qschur.generators"]]
    assert report.passed
