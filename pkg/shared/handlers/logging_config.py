"""
Logging configuration - Loguru em stderr + ponte opcional para o Prefect
"""
import sys
import logging
from typing import Optional

from loguru import logger
from prefect import get_run_logger

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)

LEVEL_MAP = {
    'TRACE': logging.DEBUG,
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'SUCCESS': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL,
}


class InterceptHandler(logging.Handler):
    """
    Intercepta logs do logging padrão (sympy, prefect, httpx) e redireciona para Loguru
    """
    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


class PrefectHandler(logging.Handler):
    """
    Envia logs para o logger da execução Prefect corrente
    """
    def emit(self, record: logging.LogRecord) -> None:
        try:
            prefect_logger = get_run_logger()
            prefect_logger.log(LEVEL_MAP.get(record.levelname, logging.INFO), record.getMessage())
        except Exception:
            # fora de contexto Prefect
            pass


def setup_logging(enable_prefect: bool = False, level: str = "INFO") -> None:
    """
    Configura logging: stdout fica reservado para JSON

    Args:
        enable_prefect: Se True, encaminha também para o logger da execução Prefect
        level: Nível mínimo (DEBUG, INFO, WARNING, ERROR)
    """
    level = level.upper()
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=level, colorize=True)

    if enable_prefect:
        logging.basicConfig(handlers=[PrefectHandler()], level=LEVEL_MAP.get(level, logging.INFO), force=True)
        logging.getLogger().addHandler(InterceptHandler())
        logger.debug("Logging configurado: stderr + Prefect")
    else:
        logging.basicConfig(handlers=[InterceptHandler()], level=LEVEL_MAP.get(level, logging.INFO), force=True)
        logger.debug("Logging configurado: stderr apenas")


def get_logger(name: Optional[str] = None):
    """
    Retorna logger configurado

    Args:
        name: Nome do módulo (opcional)

    Returns:
        Logger do Loguru
    """
    if name:
        return logger.bind(name=name)
    return logger


def get_task_logger():
    """Logger da execução Prefect, ou logging padrão fora de um flow"""
    try:
        return get_run_logger()
    except Exception:
        return logging.getLogger("workbench")
