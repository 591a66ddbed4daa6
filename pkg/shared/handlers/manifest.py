"""
Run Ledger - Rastreabilidade das suítes de verificação executadas
"""
import hashlib
import json
from datetime import datetime
from pathlib import Path
from typing import Optional

from shared.handlers.logging_config import get_logger

logger = get_logger(__name__)


def config_digest(config: dict) -> str:
    """Hash curto e estável do eco de configuração"""
    payload = json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:12]


class RunLedger:
    """Gerencia o ledger JSON de execuções: uma entrada por (suíte, digest da configuração)"""

    def __init__(self, ledger_path: Path):
        self.ledger_path = Path(ledger_path)
        self.ledger_path.parent.mkdir(parents=True, exist_ok=True)
        self.data = self._load()

    def _load(self) -> dict:
        """Carrega ledger existente"""
        if self.ledger_path.exists():
            with open(self.ledger_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        return {}

    def _save(self) -> None:
        with open(self.ledger_path, 'w', encoding='utf-8') as f:
            json.dump(self.data, f, indent=2, ensure_ascii=False, sort_keys=True, default=str)

    @staticmethod
    def key(suite: str, config: dict) -> str:
        return f"{suite}@{config_digest(config)}"

    def add_entry(self, report_dict: dict) -> str:
        """
        Registra o resultado de uma suíte, mantendo o histórico de execuções

        Args:
            report_dict: Saída de VerificationReport.to_dict()

        Returns:
            Chave da entrada
        """
        key = self.key(report_dict["suite"], report_dict["config"])
        entry = self.data.setdefault(key, {
            "suite": report_dict["suite"],
            "config": report_dict["config"],
            "runs": [],
        })
        run = {
            "status": "pass" if report_dict["pass"] else "fail",
            "n_checks": report_dict["n_checks"],
            "n_failed": report_dict["n_failed"],
            "conventions": report_dict.get("conventions", {}),
            "wall_time_s": report_dict.get("wall_time_s"),
            "recorded_at": datetime.now().isoformat(),
        }
        entry["runs"].append(run)
        entry["last_status"] = run["status"]
        self._save()
        logger.info(f"Ledger atualizado: {key} ({run['status']})")
        return key

    def get_entry(self, suite: str, config: dict) -> Optional[dict]:
        return self.data.get(self.key(suite, config))

    def is_verified(self, suite: str, config: dict) -> bool:
        """Última execução da suíte nessa configuração passou"""
        entry = self.get_entry(suite, config)
        return entry is not None and entry.get("last_status") == "pass"

    def detect_regression(self, suite: str, config: dict) -> bool:
        """Passou antes e falhou na última execução"""
        entry = self.get_entry(suite, config)
        if not entry or len(entry["runs"]) < 2:
            return False
        previous, last = entry["runs"][-2]["status"], entry["runs"][-1]["status"]
        if previous == "pass" and last == "fail":
            logger.warning(f"⚠️  REGRESSÃO em {suite}: passou antes, falhou agora")
            return True
        return False

    def get_stats(self) -> dict:
        if not self.data:
            return {'total_suites': 0, 'total_runs': 0, 'passing': 0, 'failing': 0}
        runs = sum(len(entry["runs"]) for entry in self.data.values())
        passing = sum(1 for entry in self.data.values() if entry.get("last_status") == "pass")
        return {
            'total_suites': len(self.data),
            'total_runs': runs,
            'passing': passing,
            'failing': len(self.data) - passing,
        }
