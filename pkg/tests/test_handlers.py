import json

import pytest

from shared.algebra.errors import BadParameter
from shared.handlers.config import ENV_VARS, WorkbenchSettings, load_settings
from shared.handlers.manifest import RunLedger, config_digest
from products.workbench.reports import CheckResult, VerificationReport


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    return tmp_path / ".env"


def _toml(tmp_path, body: str):
    path = tmp_path / "workbench.toml"
    path.write_text(body, encoding="utf-8")
    return path


def test_defaults_without_files(clean_env, tmp_path):
    settings = load_settings(None, None, env_path=clean_env)
    assert settings.d >= 1
    assert settings.field_config().characteristic == settings.char


def test_precedence_toml_env_cli(clean_env, tmp_path, monkeypatch):
    path = _toml(tmp_path, '[workbench]\nd = 3\norder = 3\nq = "3"\n')
    monkeypatch.setenv("WORKBENCH_ORDER", "4")
    settings = load_settings(path, {"q": "5", "order": None}, env_path=clean_env)
    assert (settings.d, settings.order, settings.q) == (3, 4, "5")
    assert settings.overrides == {"d": str(path), "order": "env", "q": "cli"}


def test_env_file_does_not_override_environment(clean_env, monkeypatch):
    monkeypatch.setenv("WORKBENCH_SEED", "0")
    monkeypatch.delenv("WORKBENCH_SEED")
    monkeypatch.setenv("WORKBENCH_D", "1")
    clean_env.write_text("WORKBENCH_SEED=7\nWORKBENCH_D=4\n", encoding="utf-8")
    settings = load_settings(None, None, env_path=clean_env)
    assert settings.seed == 7
    assert settings.d == 1


def test_parameter_lists_are_coerced(clean_env):
    settings = load_settings(None, {"Q": "3, 5", "point": "1,2", "char": "7"}, env_path=clean_env)
    assert settings.Q == ("3", "5")
    assert settings.point == ("1", "2")
    assert settings.char == 7
    assert WorkbenchSettings().merged({"Q": 7}, "teste").Q == ("7",)


def test_bad_settings(clean_env, tmp_path):
    with pytest.raises(BadParameter):
        load_settings(_toml(tmp_path, "[workbench]\ncolour = 1\n"), None, env_path=clean_env)
    with pytest.raises(BadParameter):
        load_settings(tmp_path / "missing.toml", None, env_path=clean_env)
    with pytest.raises(BadParameter):
        load_settings(None, {"d": "two"}, env_path=clean_env)


def test_config_digest_is_stable():
    assert config_digest({"a": 1, "b": [2]}) == config_digest({"b": [2], "a": 1})
    assert config_digest({"a": 1}) != config_digest({"a": 2})
    assert len(config_digest({})) == 12


def _report(passed: bool) -> dict:
    report = VerificationReport(suite="hecke.presentation", config={"d": 2, "level": 1})
    report.add(CheckResult("quadratic[c=bb,r=1]", True))
    report.add(CheckResult("braid[c=bbb,r=1]", passed, {} if passed else {"lhs": "1", "rhs": "0"}))
    return report.to_dict()


def test_ledger_tracks_regressions(tmp_path):
    path = tmp_path / "ledger" / "runs.json"
    ledger = RunLedger(path)
    key = ledger.add_entry(_report(True))
    assert key.startswith("hecke.presentation@")
    assert ledger.is_verified("hecke.presentation", {"d": 2, "level": 1})
    assert not ledger.detect_regression("hecke.presentation", {"d": 2, "level": 1})

    ledger.add_entry(_report(False))
    assert not ledger.is_verified("hecke.presentation", {"d": 2, "level": 1})
    assert ledger.detect_regression("hecke.presentation", {"d": 2, "level": 1})
    assert ledger.get_stats() == {"total_suites": 1, "total_runs": 2, "passing": 0, "failing": 1}

    stored = json.loads(path.read_text(encoding="utf-8"))
    assert stored[key]["runs"][-1]["n_failed"] == 1
    assert RunLedger(path).get_entry("hecke.presentation", {"level": 1, "d": 2})["last_status"] == "fail"


def test_empty_ledger_stats(tmp_path):
    assert RunLedger(tmp_path / "runs.json").get_stats()["total_runs"] == 0
