"""
Polinômios de Laurent esparsos e exatos

Um LaurentPoly é um mapa imutável {vetor de expoentes: coeficiente não nulo}.
Ordem grlex usada só para impressão determinística.
"""
import re
from typing import Any, Iterable, Mapping, Optional, Sequence

from shared.algebra.errors import BadParameter, DivisionByZero, ExpressionSyntaxError
from shared.algebra.scalars import Field, Scalar

Monomial = tuple[int, ...]


class PolynomialRing:
    """Anel k[x₁^{±1}, …, x_n^{±1}] com prefixo de variável ('x' ou 'y')"""

    def __init__(self, field: Field, nvars: int, prefix: str = "x"):
        self.field = field
        self.nvars = nvars
        self.prefix = prefix
        self._unit = (0,) * nvars

    def __repr__(self) -> str:
        return f"PolynomialRing({self.field.name}, {self.nvars}, {self.prefix!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and other.field == self.field
            and other.nvars == self.nvars
            and other.prefix == self.prefix
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, self.prefix))

    def with_prefix(self, prefix: str) -> "PolynomialRing":
        return PolynomialRing(self.field, self.nvars, prefix)

    @property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    @property
    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: Any) -> "LaurentPoly":
        return self.monomial(self._unit, c)

    def monomial(self, exps: Sequence[int], c: Any = 1) -> "LaurentPoly":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise BadParameter(f"Vetor de expoentes {exps} não tem tamanho {self.nvars}")
        c = self.field(c)
        return LaurentPoly(self, {exps: c} if c else {})

    def gen(self, i: int) -> "LaurentPoly":
        """Variável x_i (1-based)"""
        if not 1 <= i <= self.nvars:
            raise BadParameter(f"Variável {self.prefix}{i} fora de [1;{self.nvars}]")
        exps = [0] * self.nvars
        exps[i - 1] = 1
        return self.monomial(exps)

    def gens(self) -> list["LaurentPoly"]:
        return [self.gen(i) for i in range(1, self.nvars + 1)]

    def from_terms(self, terms: Mapping[Monomial, Any]) -> "LaurentPoly":
        clean = {}
        for exps, c in terms.items():
            c = self.field(c)
            if c:
                clean[tuple(exps)] = c
        return LaurentPoly(self, clean)

    def coerce(self, value: Any) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.ring != self:
                raise BadParameter(f"Polinômio de {value.ring} usado em {self}")
            return value
        return self.const(value)

    def parse(self, text: str) -> "LaurentPoly":
        return _PolyParser(self, text).parse()


class LaurentPoly:
    """Polinômio de Laurent esparso e imutável"""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._unit in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get(self.ring._unit, self.field.zero)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), self.field.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def min_exponents(self) -> Monomial:
        if not self.terms:
            return self.ring._unit
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Monomial:
        if not self.terms:
            return self.ring._unit
        return tuple(max(col) for col in zip(*self.terms))

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for exps in self.terms for e in exps)

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Termos em ordem grlex decrescente"""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Scalar]:
        return self.sorted_terms()[0]

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _other(self, other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return self.ring.coerce(other)
        try:
            return self.ring.const(other)
        except Exception:
            return None

    def __add__(self, other: Any) -> "LaurentPoly":
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps)
            s = c if s is None else s + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = self._other(other)
            if other is None:
                return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero
        if other.is_constant():
            return self.scale(other.constant_term())
        if self.is_constant():
            return other.scale(self.constant_term())
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exps)
                terms[exps] = c1 * c2 if s is None else s + c1 * c2
        return LaurentPoly(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = self.field(c)
        if not c:
            return self.ring.zero
        return LaurentPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiplica pelo monômio x^exps"""
        return LaurentPoly(
            self.ring, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        )

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise DivisionByZero("Potência negativa de polinômio que não é monômio")
            (exps, c), = self.terms.items()
            return LaurentPoly(
                self.ring, {tuple(n * e for e in exps): self.field.power(c, n)}
            )
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(other).terms
        except Exception:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            key = self.field.key
            self._hash = hash(frozenset((e, key(c)) for e, c in self.terms.items()))
        return self._hash

    # ------------------------------------------------------------------
    # Ação de permutações e substituições
    # ------------------------------------------------------------------

    def permute(self, images: Sequence[int]) -> "LaurentPoly":
        """
        Aplica w(x_i) = x_{w(i)}

        Args:
            images: Notação de uma linha 0-based de w
        """
        n = self.ring.nvars
        out = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for i, a in enumerate(exps):
                new[images[i]] = a
            out[tuple(new)] = c
        return LaurentPoly(self.ring, out)

    def swap(self, r: int) -> "LaurentPoly":
        """Aplica s_r (troca x_r e x_{r+1}, 1-based)"""
        out = {}
        for exps, c in self.terms.items():
            e = list(exps)
            e[r - 1], e[r] = e[r], e[r - 1]
            out[tuple(e)] = c
        return LaurentPoly(self.ring, out)

    def is_symmetric_under(self, images: Sequence[int]) -> bool:
        return self.permute(images) == self

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        field = self.field
        total = field.zero
        for exps, c in self.terms.items():
            value = c
            for p, a in zip(point, exps):
                if a:
                    value = value * field.power(p, a)
            total = total + value
        return total

    def substitute(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """
        Substitui x_k ↦ images[k]; expoentes negativos exigem imagens monomiais
        """
        target = images[0].ring if images else self.ring
        result = target.zero
        cache: dict = {}
        for exps, c in self.terms.items():
            term = target.const(c)
            for k, a in enumerate(exps):
                if a:
                    if (k, a) not in cache:
                        cache[(k, a)] = images[k] ** a
                    term = term * cache[(k, a)]
            result = result + term
        return result

    def rename(self, ring: PolynomialRing) -> "LaurentPoly":
        """Mesmo polinômio lido em outro anel com o mesmo número de variáveis"""
        if ring.nvars != self.ring.nvars:
            raise BadParameter("Anéis com números de variáveis diferentes")
        return LaurentPoly(ring, dict(self.terms))

    def embed(self, ring: PolynomialRing, positions: Sequence[int]) -> "LaurentPoly":
        """Envia x_k para a variável positions[k] (0-based) de `ring`"""
        out = {}
        for exps, c in self.terms.items():
            new = [0] * ring.nvars
            for k, a in enumerate(exps):
                new[positions[k]] += a
            out[tuple(new)] = c
        return LaurentPoly(ring, out)

    # ------------------------------------------------------------------
    # Impressão
    # ------------------------------------------------------------------

    def format(self) -> str:
        if not self.terms:
            return "0"
        field = self.field
        parts: list[str] = []
        for exps, c in self.sorted_terms():
            negative = field.is_negative(c)
            mag = -c if negative else c
            mono = "*".join(
                f"{self.ring.prefix}{k + 1}" + ("" if a == 1 else f"^{a}")
                for k, a in enumerate(exps)
                if a
            )
            if not mono:
                body = field.format(mag)
            elif mag == field.one:
                body = mono
            else:
                body = f"{field.format(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    __str__ = format

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


def symmetric_sum(polys: Iterable[LaurentPoly], ring: PolynomialRing) -> LaurentPoly:
    total = ring.zero
    for p in polys:
        total = total + p
    return total


def elementary_symmetric(ring: PolynomialRing, k: int, variables: Optional[Sequence[int]] = None) -> LaurentPoly:
    """e_k nas variáveis dadas (1-based; padrão todas)"""
    from itertools import combinations

    variables = list(variables or range(1, ring.nvars + 1))
    total = ring.zero
    for subset in combinations(variables, k):
        exps = [0] * ring.nvars
        for i in subset:
            exps[i - 1] += 1
        total = total + ring.monomial(exps)
    return total


# ============================================================================
# PARSER
# ============================================================================

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(\d+)|(\^)|(\*)|(/)|(\+)|(-)|(\()|(\)))")


class _PolyParser:
    """Descida recursiva: expr := termo {(+|-) termo}; termo := fator {(*|/) fator}"""

    def __init__(self, ring: PolynomialRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, Any, int]]:
        tokens = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN_RE.match(text, i)
            if not m or m.end() == i:
                raise ExpressionSyntaxError(f"Caractere inesperado {text[i]!r}", i, text)
            start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
            if m.group(1):
                tokens.append(("num", int(m.group(1)), start))
            elif m.group(2):
                if m.group(2) != self.ring.prefix:
                    raise ExpressionSyntaxError(f"Variável desconhecida {m.group(2)!r}", start, text)
                tokens.append(("var", int(m.group(3)), start))
            else:
                tokens.append(("op", m.group(0).strip(), start))
            i = m.end()
        tokens.append(("end", None, len(text)))
        return tokens

    def _peek(self) -> tuple[str, Any, int]:
        return self.tokens[self.pos]

    def _next(self) -> tuple[str, Any, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect_op(self, op: str) -> None:
        kind, value, position = self._next()
        if kind != "op" or value != op:
            raise ExpressionSyntaxError(f"Esperado {op!r}", position, self.text)

    def parse(self) -> LaurentPoly:
        result = self._expr()
        kind, _, position = self._peek()
        if kind != "end":
            raise ExpressionSyntaxError("Texto excedente", position, self.text)
        return result

    def _expr(self) -> LaurentPoly:
        sign = 1
        kind, value, _ = self._peek()
        if kind == "op" and value in "+-":
            self._next()
            sign = -1 if value == "-" else 1
        result = self._term() * sign
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value in "+-":
                self._next()
                term = self._term()
                result = result + term if value == "+" else result - term
            else:
                return result

    def _term(self) -> LaurentPoly:
        result = self._factor()
        while True:
            kind, value, position = self._peek()
            if kind == "op" and value == "*":
                self._next()
                result = result * self._factor()
            elif kind == "op" and value == "/":
                self._next()
                divisor = self._factor()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ExpressionSyntaxError("Divisão só por escalar não nulo", position, self.text)
                result = result.scale(self.ring.field.inv(divisor.constant_term()))
            else:
                return result

    def _factor(self) -> LaurentPoly:
        base = self._base()
        kind, value, _ = self._peek()
        if kind == "op" and value == "^":
            self._next()
            sign = 1
            kind, value, position = self._peek()
            if kind == "op" and value == "-":
                self._next()
                sign = -1
            kind, value, position = self._next()
            if kind != "num":
                raise ExpressionSyntaxError("Expoente inteiro esperado", position, self.text)
            return base ** (sign * value)
        return base

    def _base(self) -> LaurentPoly:
        kind, value, position = self._next()
        if kind == "num":
            return self.ring.const(value)
        if kind == "var":
            if not 1 <= value <= self.ring.nvars:
                raise ExpressionSyntaxError(
                    f"Variável {self.ring.prefix}{value} fora de [1;{self.ring.nvars}]", position, self.text
                )
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            inner = self._expr()
            self._expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self._factor()
        raise ExpressionSyntaxError("Termo esperado", position, self.text)
