"""
Configuração do workbench - padrões < TOML < variáveis de ambiente < flags da CLI
"""
from dataclasses import dataclass, field, fields, replace
import os
from pathlib import Path
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import Any, Optional

from dotenv import load_dotenv

from shared.algebra.errors import BadParameter
from shared.algebra.scalars import FieldConfig
from shared.handlers.logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_TOML = Path("config/workbench.toml")
DEFAULT_ENV = Path("config/.env")

ENV_VARS = {
    "WORKBENCH_CHAR": "char",
    "WORKBENCH_Q": "q",
    "WORKBENCH_QS": "Q",
    "WORKBENCH_D": "d",
    "WORKBENCH_LEVEL": "level",
    "WORKBENCH_ORDER": "order",
    "WORKBENCH_SEED": "seed",
}

INT_FIELDS = {"char", "d", "level", "order", "seed", "workers", "window"}


@dataclass(frozen=True)
class WorkbenchSettings:
    """Parâmetros de uma execução; espelha as flags da CLI"""
    char: int = 0
    q: str = "2"
    Q: tuple = ("3", "5")
    d: int = 2
    level: Optional[int] = None
    order: int = 2
    point: Optional[tuple] = None
    seed: int = 0
    workers: int = 1
    window: int = 3
    ledger: Optional[str] = None
    overrides: dict = field(default_factory=dict, compare=False)

    def field_config(self) -> FieldConfig:
        return FieldConfig(characteristic=self.char, q=self.q, Q=tuple(self.Q), d=self.d, level=self.level)

    def merged(self, values: dict, source: str) -> "WorkbenchSettings":
        """Nova configuração com os valores não nulos de `values`"""
        known = {f.name for f in fields(self)} - {"overrides"}
        unknown = sorted(set(values) - known)
        if unknown:
            raise BadParameter(f"Chaves desconhecidas em {source}: {unknown}")
        clean = {k: _coerce(k, v) for k, v in values.items() if v is not None}
        if not clean:
            return self
        overrides = {**self.overrides, **{k: source for k in clean}}
        return replace(self, **clean, overrides=overrides)


def _coerce(key: str, value: Any) -> Any:
    if key in INT_FIELDS:
        try:
            return int(value)
        except (TypeError, ValueError) as exc:
            raise BadParameter(f"{key} deve ser inteiro, recebido {value!r}") from exc
    if key in ("Q", "point"):
        if isinstance(value, str):
            return tuple(v.strip() for v in value.split(",") if v.strip())
        if isinstance(value, (int, float)):
            return (str(value),)
        return tuple(str(v) for v in value)
    if key == "q":
        return str(value)
    return value


def load_toml(path: Path) -> dict:
    """Tabela [workbench] (ou o topo) do arquivo TOML"""
    with open(path, "rb") as f:
        data = tomllib.load(f)
    return data.get("workbench", data)


def load_env(env_path: Path = DEFAULT_ENV) -> dict:
    """Variáveis WORKBENCH_* (config/.env carregado sem sobrescrever o ambiente)"""
    if env_path.exists():
        load_dotenv(env_path)
    return {key: os.environ[var] for var, key in ENV_VARS.items() if os.environ.get(var)}


def load_settings(config_path: Optional[Path] = None, cli: Optional[dict] = None,
                  env_path: Path = DEFAULT_ENV) -> WorkbenchSettings:
    """
    Resolve a configuração efetiva

    Args:
        config_path: TOML explícito (--config); sem ele usa config/workbench.toml se existir
        cli: Flags da CLI (None = não informada)
        env_path: Arquivo .env

    Returns:
        WorkbenchSettings

    Raises:
        BadParameter: arquivo --config ausente ou chave desconhecida
    """
    settings = WorkbenchSettings()
    toml_path = config_path or DEFAULT_TOML
    if config_path is not None and not config_path.exists():
        raise BadParameter(f"Arquivo de configuração não encontrado: {config_path}")
    if toml_path.exists():
        settings = settings.merged(load_toml(toml_path), str(toml_path))
    settings = settings.merged(load_env(env_path), "env")
    settings = settings.merged(cli or {}, "cli")
    logger.debug(f"Configuração: {settings}")
    return settings
