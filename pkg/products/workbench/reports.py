"""
Relatórios de verificação - JSON determinístico + tabelas polars em stderr
"""
from dataclasses import dataclass, field
import json
import sys
import time
from typing import Any, Callable, Iterable, Optional

import polars as pl

from shared.algebra.smash import SmashOperator, block_key
from shared.handlers.logging_config import get_logger

logger = get_logger(__name__)


@dataclass
class CheckResult:
    """Resultado de uma verificação com testemunha em caso de falha"""
    check_id: str
    passed: bool
    witness: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"id": self.check_id, "status": "pass" if self.passed else "fail"}
        if self.info:
            out["info"] = self.info
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    """Relatório de uma suíte"""
    suite: str
    config: dict
    checks: list[CheckResult] = field(default_factory=list)
    conventions: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def extend(self, results: Iterable[CheckResult]) -> None:
        self.checks.extend(results)

    def sort(self) -> None:
        self.checks.sort(key=lambda c: c.check_id)

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "config": self.config,
            "pass": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "conventions": self.conventions,
            "results": self.results,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.check_id)],
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, ensure_ascii=False, indent=2)

    def summary_frame(self) -> pl.DataFrame:
        """Uma linha por prefixo de verificação"""
        rows: dict[str, list[int]] = {}
        for c in self.checks:
            group = c.check_id.split("[")[0]
            passed, failed = rows.get(group, [0, 0])
            rows[group] = [passed + c.passed, failed + (not c.passed)]
        groups = sorted(rows)
        return pl.DataFrame({
            "grupo": groups,
            "ok": [rows[g][0] for g in groups],
            "falhas": [rows[g][1] for g in groups],
        })

    def print_summary(self, stream=None) -> None:
        stream = stream or sys.stderr
        status = "✅" if self.passed else "❌"
        print("=" * 80, file=stream)
        print(f"{status} RESUMO {self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)}", file=stream)
        print("=" * 80, file=stream)
        with pl.Config(tbl_rows=-1):
            print(self.summary_frame(), file=stream)
        for key, value in sorted(self.conventions.items()):
            print(f"   convenção {key}: {value}", file=stream)


def log_report(report: VerificationReport) -> None:
    """Uma linha ✅/❌ por suíte e as primeiras falhas"""
    status = "✅" if report.passed else "❌"
    logger.info(f"{status} {report.suite}: {len(report.checks) - len(report.failures)}/{len(report.checks)} verificações")
    for failure in report.failures[:5]:
        logger.warning(f"⚠️  Falhou {failure.check_id}: {failure.witness}")


def merge_reports(suite: str, config: dict, reports: Iterable[VerificationReport]) -> VerificationReport:
    merged = VerificationReport(suite=suite, config=config)
    for r in reports:
        for c in r.checks:
            merged.add(CheckResult(f"{r.suite}/{c.check_id}", c.passed, c.witness, c.info))
        merged.conventions.update({f"{r.suite}.{k}": v for k, v in r.conventions.items()})
        merged.results.update({f"{r.suite}.{k}": v for k, v in r.results.items()})
        merged.wall_time += r.wall_time
    merged.sort()
    return merged


def compare_operators(check_id: str, lhs: SmashOperator, rhs: SmashOperator,
                      info: Optional[dict] = None) -> CheckResult:
    """Igualdade exata de operadores; testemunha = primeira componente diferente"""
    diff = lhs - rhs
    if diff.is_zero():
        return CheckResult(check_id, True, info=info or {})
    b, c, w, coeff = next(iter(diff.terms()))
    witness = {
        "block": f"{block_key(b)} <- {block_key(c)}",
        "perm": w.format(),
        "lhs": lhs.coefficient(b, c, w).format(),
        "rhs": rhs.coefficient(b, c, w).format(),
    }
    return CheckResult(check_id, False, witness, info or {})


def guarded(check_id: str, fn: Callable[[], CheckResult]) -> CheckResult:
    """Converte exceções de uma verificação em falha reportada"""
    try:
        return fn()
    except Exception as exc:
        return CheckResult(check_id, False, {"error": type(exc).__name__, "message": str(exc)})


class Stopwatch:
    def __enter__(self) -> "Stopwatch":
        self.start = time.perf_counter()
        self.elapsed = 0.0
        return self

    def __exit__(self, *exc: Any) -> None:
        self.elapsed = time.perf_counter() - self.start
