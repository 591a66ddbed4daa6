import json
import sys

import pytest
from loguru import logger

from products.workbench.algebras.hecke import HeckeAlgebra
from products.workbench.algebras.klr import KLRAlgebra
from products.workbench.algebras.schur import SchurEngine
from products.workbench.cli.main import engine_for, main
from products.workbench.expressions import parse

LEVEL_ZERO = ["--Q", "", "--level", "0", "--d", "2", "--q", "2", "--char", "0"]


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_act_on_polynomial(capsys):
    code, payload = _run(capsys, ["act", "T1", "on", "x1", *LEVEL_ZERO])
    assert code == 0
    assert payload["value"] == "-2*x2"
    assert payload["result"] == {"bb": "-2*x2"}
    assert payload["input"] == "x1"


def test_normal_form(capsys):
    code, payload = _run(capsys, ["normal-form", "T1*T1", *LEVEL_ZERO])
    assert code == 0
    assert sorted(row["coeff"] for row in payload["basis"]) == ["1", "2"]
    assert {row["perm"] for row in payload["basis"]} == {"[1,2]", "[2,1]"}


def test_syntax_error_reports_position(capsys):
    code, payload = _run(capsys, ["act", "T1 + *", "on", "x1", *LEVEL_ZERO])
    assert code == 2
    assert payload["error"] == "ExpressionSyntaxError"
    assert isinstance(payload["position"], int)


def test_index_error_reports_position(capsys):
    code, payload = _run(capsys, ["normal-form", "T1*T5", *LEVEL_ZERO])
    assert code == 2
    assert payload["error"] == "ExpressionIndexError"
    assert payload["position"] == 3


def test_bad_parameter(capsys):
    code, payload = _run(capsys, ["act", "T1", "on", "x1", "--q", "1", "--Q", "", "--level", "0"])
    assert code == 2
    assert payload["error"] == "BadParameter"


def test_verify_writes_ledger(capsys, tmp_path):
    ledger = tmp_path / "runs.json"
    code, payload = _run(capsys, [
        "verify", "qschur", "--Q", "3", "--level", "1", "--d", "1", "--point", "3",
        "--no-timing", "--ledger", str(ledger),
    ])
    assert code == 0
    assert payload["pass"] is True
    assert "wall_time_s" not in payload
    assert all("witness" not in check for check in payload["checks"])
    stored = json.loads(ledger.read_text(encoding="utf-8"))
    assert [entry["last_status"] for entry in stored.values()] == ["pass"]


def test_dim_cyclotomic(capsys):
    code, payload = _run(capsys, [
        "dim", "cyclotomic", "--kind", "classical", "--Q", "3,5", "--d", "1", "--window", "3", "--no-timing",
    ])
    assert code == 0
    assert payload["dimension"] == 2
    assert payload["results"]["stabilized"] is True


def test_engine_selection(level_one):
    assert isinstance(engine_for(parse("psi1*y1"), level_one, None), KLRAlgebra)
    assert isinstance(engine_for(parse("split(((2)|()) -> ((1,1)|()))"), level_one, None), SchurEngine)
    assert isinstance(engine_for(parse("T1*X2"), level_one, None), HeckeAlgebra)


def test_dim_cyclotomic_small_window(capsys):
    code, payload = _run(capsys, [
        "dim", "cyclotomic", "--kind", "classical", "--Q", "3,5", "--d", "1", "--window", "2", "--no-timing",
    ])
    assert code == 2
    assert payload["error"] == "WindowNotStabilized"
