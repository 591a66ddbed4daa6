"""
Escalares exatos - racionais ou corpo primo F_p

Os elementos são elementos de domínio do sympy (QQ ou GF(p)); a classe Field
concentra coerção, parsing, formatação e a ordem multiplicativa de q.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
import random
import re
from typing import Any, Optional, Sequence

from sympy import isprime
from sympy.polys.domains import GF, QQ

from shared.algebra.errors import (
    BadParameter,
    DivisionByZero,
    NonPrimeCharacteristic,
)

Scalar = Any

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


class Field:
    """Corpo de coeficientes: característica 0 (QQ) ou primo p (GF(p))"""

    def __init__(self, characteristic: int = 0):
        if characteristic < 0:
            raise NonPrimeCharacteristic(f"Característica inválida: {characteristic}")
        if characteristic and not isprime(characteristic):
            raise NonPrimeCharacteristic(f"Característica {characteristic} não é prima")
        self.characteristic = characteristic
        self.domain = GF(characteristic, symmetric=False) if characteristic else QQ
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __repr__(self) -> str:
        return f"Field({self.name})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    @property
    def name(self) -> str:
        return f"F_{self.characteristic}" if self.characteristic else "QQ"

    # ------------------------------------------------------------------
    # Coerção
    # ------------------------------------------------------------------

    def __call__(self, value: Any) -> Scalar:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Fraction):
            return self.div(self.domain(value.numerator), self.domain(value.denominator))
        if self.domain.of_type(value):
            return value
        return self.domain.convert(value)

    def parse(self, text: str) -> Scalar:
        """
        Converte texto 'a' ou 'a/b' em escalar

        Args:
            text: Inteiro ou fração

        Returns:
            Escalar do corpo
        """
        match = _SCALAR_RE.match(text)
        if not match:
            raise BadParameter(f"Escalar inválido: {text!r}")
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) else 1
        return self.div(self.domain(num), self.domain(den))

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if not b:
            raise DivisionByZero(f"Divisão por zero em {self.name}")
        return a * self.inv(b)

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise DivisionByZero(f"Zero não é invertível em {self.name}")
        return self.domain.revert(a)

    def neg(self, a: Scalar) -> Scalar:
        return -a

    def power(self, a: Scalar, n: int) -> Scalar:
        if n < 0:
            return self.inv(a) ** (-n)
        return a ** n

    def is_zero(self, a: Scalar) -> bool:
        return not a

    def arith(self, a: Scalar, b: Scalar, op: str) -> Scalar:
        """Aritmética por símbolo: '+', '-', '*', '/' (também '×', '÷', '−')"""
        ops = {
            "+": self.add, "-": self.sub, "−": self.sub,
            "*": self.mul, "×": self.mul, "/": self.div, "÷": self.div,
        }
        if op not in ops:
            raise BadParameter(f"Operação desconhecida: {op!r}")
        return ops[op](a, b)

    # ------------------------------------------------------------------
    # Representação
    # ------------------------------------------------------------------

    def key(self, a: Scalar) -> tuple[int, int]:
        """Representação canônica (numerador, denominador) para ordenação e hashing"""
        if self.characteristic:
            return (int(a) % self.characteristic, 1)
        return (int(self.domain.numer(a)), int(self.domain.denom(a)))

    def format(self, a: Scalar) -> str:
        num, den = self.key(a)
        return str(num) if den == 1 else f"{num}/{den}"

    def is_negative(self, a: Scalar) -> bool:
        """Sinal só faz sentido em característica 0"""
        return not self.characteristic and self.key(a)[0] < 0

    def order(self, a: Scalar) -> Optional[int]:
        """
        Ordem multiplicativa de a

        Returns:
            Menor n ≥ 1 com a^n = 1, ou None (ordem infinita)
        """
        if not a:
            raise BadParameter("Zero não tem ordem multiplicativa")
        if self.characteristic:
            value = a
            for n in range(1, self.characteristic):
                if value == self.one:
                    return n
                value = value * a
            return None
        if a == self.one:
            return 1
        if a == -self.one:
            return 2
        return None

    def random_element(self, rng: random.Random, bound: int = 5, nonzero: bool = False) -> Scalar:
        while True:
            if self.characteristic:
                value = self.domain(rng.randrange(self.characteristic))
            else:
                value = self.div(self.domain(rng.randint(-bound, bound)), self.domain(rng.randint(1, bound)))
            if value or not nonzero:
                return value


@lru_cache(maxsize=None)
def get_field(characteristic: int = 0) -> Field:
    return Field(characteristic)


# ============================================================================
# CONFIGURAÇÃO
# ============================================================================

@dataclass(frozen=True)
class FieldConfig:
    """Parâmetros brutos (texto, inteiros ou frações) antes da validação"""
    characteristic: int = 0
    q: Any = 2
    Q: tuple = ()
    d: int = 2
    level: Optional[int] = None


@dataclass(frozen=True)
class ValidatedConfig:
    """Configuração validada com q, Q já no corpo"""
    field: Field
    q: Scalar
    Q: tuple
    d: int
    level: int
    order_q: Optional[int] = dc_field(default=None)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def with_rank(self, d: int) -> "ValidatedConfig":
        return ValidatedConfig(self.field, self.q, self.Q, d, self.level, self.order_q)

    def with_level(self, level: int) -> "ValidatedConfig":
        """Usa os primeiros `level` parâmetros de Q"""
        if level > len(self.Q):
            raise BadParameter(f"Nível {level} excede os {len(self.Q)} parâmetros Q")
        return ValidatedConfig(self.field, self.q, self.Q[:level], self.d, level, self.order_q)

    def inverted(self) -> "ValidatedConfig":
        """Mesma configuração com Q ↦ Q⁻¹"""
        return ValidatedConfig(
            self.field, self.q, tuple(self.field.inv(Qm) for Qm in self.Q),
            self.d, self.level, self.order_q,
        )

    def echo(self) -> dict:
        fmt = self.field.format
        return {
            "char": self.characteristic,
            "q": fmt(self.q),
            "Q": [fmt(Qm) for Qm in self.Q],
            "d": self.d,
            "level": self.level,
            "order_q": self.order_q,
        }


def validate_config(cfg: FieldConfig) -> ValidatedConfig:
    """
    Valida parâmetros e calcula a ordem multiplicativa de q

    Args:
        cfg: Configuração bruta

    Returns:
        ValidatedConfig com order_q = None quando q não é raiz da unidade
    """
    field = get_field(cfg.characteristic)
    q = field(cfg.q)
    if not q:
        raise BadParameter("q = 0 não é permitido")
    if q == field.one:
        raise BadParameter("q = 1 não é permitido")

    Q = tuple(field(Qm) for Qm in _as_sequence(cfg.Q))
    for m, Qm in enumerate(Q, start=1):
        if not Qm:
            raise BadParameter(f"Q_{m} = 0 não é permitido")

    level = len(Q) if cfg.level is None else cfg.level
    if level < 0 or level > len(Q):
        raise BadParameter(f"Nível {level} incompatível com Q de tamanho {len(Q)}")
    if cfg.d < 0:
        raise BadParameter(f"Posto d = {cfg.d} negativo")

    return ValidatedConfig(
        field=field, q=q, Q=Q[:level], d=cfg.d, level=level, order_q=field.order(q),
    )


def _as_sequence(values: Any) -> Sequence:
    if isinstance(values, str):
        return [v for v in values.split(",") if v.strip()]
    if isinstance(values, (int, Fraction)):
        return [values]
    return list(values)
