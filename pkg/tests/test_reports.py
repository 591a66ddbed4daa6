import io
import json

from loguru import logger

from shared.algebra.laurent import PolynomialRing
from shared.algebra.smash import SmashOperator
from products.workbench.reports import (
    CheckResult,
    Stopwatch,
    VerificationReport,
    compare_operators,
    guarded,
    log_report,
    merge_reports,
)


def _report(suite, *results):
    report = VerificationReport(suite=suite, config={"char": 0})
    report.extend(results)
    return report


def test_to_dict_is_sorted_and_counts_failures():
    report = _report(
        "hecke",
        CheckResult("b", True),
        CheckResult("a", False, {"lhs": "1", "rhs": "2"}),
    )
    out = report.to_dict(include_timing=False)
    assert [c["id"] for c in out["checks"]] == ["a", "b"]
    assert out["pass"] is False
    assert out["n_failed"] == 1
    assert out["checks"][0]["witness"] == {"lhs": "1", "rhs": "2"}
    assert "witness" not in out["checks"][1]
    assert "wall_time_s" not in out


def test_json_is_deterministic():
    a = _report("s", CheckResult("x", True), CheckResult("y", True))
    b = _report("s", CheckResult("y", True), CheckResult("x", True))
    assert a.to_json(include_timing=False) == b.to_json(include_timing=False)
    assert json.loads(a.to_json())["wall_time_s"] == 0.0


def test_merge_prefixes_ids():
    merged = merge_reports(
        "all", {"char": 0},
        [_report("klr", CheckResult("r1", True)), _report("hecke", CheckResult("r1", False))],
    )
    assert [c.check_id for c in merged.checks] == ["hecke/r1", "klr/r1"]
    assert not merged.passed


def test_summary_frame_groups_by_prefix():
    report = _report(
        "s",
        CheckResult("braid[1]", True),
        CheckResult("braid[2]", False),
        CheckResult("quadratic", True),
    )
    frame = report.summary_frame()
    assert frame["grupo"].to_list() == ["braid", "quadratic"]
    assert frame["ok"].to_list() == [1, 1]
    assert frame["falhas"].to_list() == [1, 0]
    stream = io.StringIO()
    report.print_summary(stream)
    assert "RESUMO s: 2/3" in stream.getvalue()


def test_guarded_turns_exceptions_into_failures():
    def boom():
        raise ZeroDivisionError("x")

    result = guarded("c", boom)
    assert not result.passed
    assert result.witness["error"] == "ZeroDivisionError"


def test_compare_operators_witness(qq):
    ring = PolynomialRing(qq, 1)
    one = SmashOperator.identity(ring, ["P"])
    assert compare_operators("same", one, one).passed
    result = compare_operators("diff", one, one.scale(2))
    assert not result.passed
    assert result.witness["lhs"] == "1"
    assert result.witness["rhs"] == "2"


def test_stopwatch():
    with Stopwatch() as sw:
        sum(range(100))
    assert sw.elapsed >= 0.0


def test_log_report_lists_failures():
    messages = []
    sink = logger.add(messages.append, format="{message}", level="INFO")
    try:
        log_report(_report("klr.relations", CheckResult("ok", True), CheckResult("bad", False, {"lhs": "1"})))
    finally:
        logger.remove(sink)
    text = "".join(messages)
    assert "❌ klr.relations: 1/2 verificações" in text
    assert "Falhou bad" in text
