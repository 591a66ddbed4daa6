"""
Hierarquia de erros do workbench

Todos os erros nomeados derivam de WorkbenchError, que deriva de ValueError.
"""
from typing import Optional


class WorkbenchError(ValueError):
    """Erro base de todos os módulos de álgebra"""


# ============================================================================
# ESCALARES
# ============================================================================

class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class BadParameter(WorkbenchError):
    pass


class NonPrimeCharacteristic(WorkbenchError):
    pass


# ============================================================================
# POLINÔMIOS
# ============================================================================

class NonReducedWord(WorkbenchError):
    pass


class PoleAtPoint(WorkbenchError):
    pass


class NotLaurent(WorkbenchError):
    pass


# ============================================================================
# COMBINATÓRIA
# ============================================================================

class NotSubgroup(WorkbenchError):
    pass


class NotMinimalRep(WorkbenchError):
    pass


class BlockMismatch(WorkbenchError):
    pass


# ============================================================================
# ÁLGEBRAS
# ============================================================================

class IndexOutOfRange(WorkbenchError, IndexError):
    pass


class IncompatibleSequences(WorkbenchError):
    pass


class NotInAlgebra(WorkbenchError):
    pass


class LabelOutsideF(WorkbenchError):
    pass


class InvalidSplit(WorkbenchError):
    pass


class InvalidCrossing(WorkbenchError):
    pass


class NotInvariant(WorkbenchError):
    pass


class CharacteristicTooSmall(WorkbenchError):
    pass


class ShapeMismatch(WorkbenchError):
    pass


class WindowNotStabilized(WorkbenchError):
    pass


# ============================================================================
# EXPRESSÕES
# ============================================================================

class ExpressionSyntaxError(WorkbenchError):
    """Erro de sintaxe com posição no texto de origem"""

    def __init__(self, message: str, position: Optional[int] = None, source: str = ""):
        self.position = position
        self.source = source
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)


class ExpressionIndexError(IndexOutOfRange):
    """Índice fora do intervalo após ligar a expressão à configuração"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        super().__init__(message)
