"""
Utilities transversais: logging, configuração e ledger de execuções
"""
from .config import WorkbenchSettings, load_settings
from .logging_config import get_logger, setup_logging
from .manifest import RunLedger

__all__ = ['WorkbenchSettings', 'load_settings', 'get_logger', 'setup_logging', 'RunLedger']
