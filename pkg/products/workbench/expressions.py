"""
Expressões de elementos - AST, parser e impressão

Gramática:
    expr := term { ('+' | '-') term }
    term := atom { '*' atom }
    atom := scalar | 'e(' seq ')' | 'T' int | 'X' int | 'Xi' int | 'x' int
          | 'psi' int | 'y' int | 'm(' mcomp ')' | 'n(' mcomp ')'
          | ('split' | 'merge' | 'lcross' | 'rcross') '(' mcomp '->' mcomp ')'
          | '(' expr ')'

Avaliação por interpretação: cada álgebra (ou mapa entre álgebras) fornece os
operadores dos geradores.
"""
from dataclasses import dataclass, field
import re
from typing import Any, Optional, Protocol, Sequence

from shared.algebra.errors import ExpressionIndexError, ExpressionSyntaxError
from shared.algebra.smash import SmashOperator

INDEXED = ("Xi", "psi", "T", "X", "x", "y")
BRACKETED = ("e", "m", "n")
ARROWED = ("split", "merge", "lcross", "rcross")


# ============================================================================
# AST
# ============================================================================

@dataclass(frozen=True)
class Scalar:
    value: str
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Gen:
    """Gerador: nome, índice (T1, psi2, …) e argumentos textuais (e(rbb), split(a->b))"""
    name: str
    index: Optional[int] = None
    args: tuple = ()
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Coeff:
    """Coeficiente racional explícito (só construído internamente)"""
    label: str
    value: Any = field(compare=False, hash=False, default=None)


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


ElementExpr = Any


def gen(name: str, index: Optional[int] = None, *args: str) -> Gen:
    return Gen(name, index, tuple(args))


def scalar(value: Any) -> Scalar:
    return Scalar(str(value))


def prod(*factors: ElementExpr) -> ElementExpr:
    flat = []
    for f in factors:
        flat.extend(f.factors if isinstance(f, Product) else (f,))
    return flat[0] if len(flat) == 1 else Product(tuple(flat))


def add(*terms: ElementExpr) -> ElementExpr:
    flat = []
    for t in terms:
        flat.extend(t.terms if isinstance(t, Sum) else (t,))
    return flat[0] if len(flat) == 1 else Sum(tuple(flat))


def neg(expr: ElementExpr) -> ElementExpr:
    return prod(Scalar("-1"), expr)


def sub(a: ElementExpr, b: ElementExpr) -> ElementExpr:
    return add(a, neg(b))


# ============================================================================
# IMPRESSÃO
# ============================================================================

def to_text(expr: ElementExpr) -> str:
    """Forma canônica; parse(to_text(e)) == e"""
    if isinstance(expr, Scalar):
        return expr.value
    if isinstance(expr, Coeff):
        return "{" + expr.label + "}"
    if isinstance(expr, Gen):
        if expr.name in ARROWED:
            return f"{expr.name}({expr.args[0]} -> {expr.args[1]})"
        if expr.name in BRACKETED:
            return f"{expr.name}({expr.args[0]})"
        return f"{expr.name}{expr.index}"
    if isinstance(expr, Product):
        return "*".join(
            f"({to_text(f)})" if isinstance(f, Sum) else to_text(f) for f in expr.factors
        )
    if isinstance(expr, Sum):
        return " + ".join(to_text(t) for t in expr.terms)
    raise TypeError(f"Nó desconhecido: {expr!r}")


# ============================================================================
# PARSER
# ============================================================================

_SCALAR_RE = re.compile(r"-?\d+(?:/\d+)?")
_NAME_RE = re.compile(r"[A-Za-z]+")
_INT_RE = re.compile(r"\d+")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.pos if position is None else position, self.src)

    def skip(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, text: str) -> None:
        self.skip()
        if not self.src.startswith(text, self.pos):
            raise self.error(f"Esperado {text!r}")
        self.pos += len(text)

    def parse(self) -> ElementExpr:
        expr = self.expr()
        self.skip()
        if self.pos != len(self.src):
            raise self.error("Texto excedente")
        return expr

    def expr(self) -> ElementExpr:
        terms = [self.term()]
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            start = self.pos
            self.pos += 1
            term = self.term()
            if op == "-":
                term = neg(term) if not isinstance(term, Scalar) else Scalar(_negate(term.value), (start, term.span[1]))
            terms.append(term)
        return add(*terms)

    def term(self) -> ElementExpr:
        factors = [self.atom()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.atom())
        return prod(*factors)

    def atom(self) -> ElementExpr:
        ch = self.peek()
        start = self.pos
        if not ch:
            raise self.error("Fim inesperado da expressão")
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        match = _SCALAR_RE.match(self.src, self.pos)
        if match:
            self.pos = match.end()
            return Scalar(match.group(0), (start, self.pos))
        match = _NAME_RE.match(self.src, self.pos)
        if not match:
            raise self.error(f"Caractere inesperado {ch!r}")
        name = match.group(0)
        if name in ARROWED or name in BRACKETED:
            self.pos = match.end()
            self.expect("(")
            body = self._balanced()
            if name in ARROWED:
                if "->" not in body:
                    raise self.error(f"{name} exige 'origem -> alvo'", start)
                left, right = (part.strip() for part in body.split("->", 1))
                return Gen(name, None, (left, right), (start, self.pos))
            return Gen(name, None, (body.strip(),), (start, self.pos))
        for prefix in INDEXED:
            if name == prefix:
                self.pos = match.end()
                num = _INT_RE.match(self.src, self.pos)
                if not num:
                    raise self.error(f"Índice inteiro esperado após {prefix}")
                self.pos = num.end()
                return Gen(prefix, int(num.group(0)), (), (start, self.pos))
        raise self.error(f"Gerador desconhecido {name!r}", start)

    def _balanced(self) -> str:
        """Lê até o ')' que fecha o '(' já consumido"""
        depth, begin = 1, self.pos
        while self.pos < len(self.src):
            ch = self.src[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    body = self.src[begin:self.pos]
                    self.pos += 1
                    return body
            self.pos += 1
        raise self.error("Parêntese não fechado", begin)


def _negate(value: str) -> str:
    return value[1:] if value.startswith("-") else f"-{value}"


def parse(src: str) -> ElementExpr:
    """
    Converte texto em AST

    Raises:
        ExpressionSyntaxError: com a posição do erro
    """
    return _Parser(src).parse()


# ============================================================================
# AVALIAÇÃO
# ============================================================================

class Interpretation(Protocol):
    def one(self) -> SmashOperator: ...
    def scalar(self, value: str) -> Any: ...
    def generator(self, node: Gen) -> SmashOperator: ...
    def coefficient(self, node: Coeff) -> SmashOperator: ...


def evaluate(expr: ElementExpr, interp: Interpretation) -> SmashOperator:
    """Avalia a AST como operador; produtos compõem da esquerda para a direita"""
    if isinstance(expr, Scalar):
        return interp.one().scale(interp.scalar(expr.value))
    if isinstance(expr, Gen):
        return interp.generator(expr)
    if isinstance(expr, Coeff):
        return interp.coefficient(expr)
    if isinstance(expr, Sum):
        total = evaluate(expr.terms[0], interp)
        for term in expr.terms[1:]:
            total = total + evaluate(term, interp)
        return total
    if isinstance(expr, Product):
        coeff = None
        result = None
        for factor in expr.factors:
            if isinstance(factor, Scalar):
                value = interp.scalar(factor.value)
                coeff = value if coeff is None else coeff * value
                continue
            op = evaluate(factor, interp)
            result = op if result is None else result * op
        if result is None:
            result = interp.one()
        return result.scale(coeff) if coeff is not None else result
    raise TypeError(f"Nó desconhecido: {expr!r}")


def check_index(node: Gen, low: int, high: int) -> int:
    """
    Raises:
        ExpressionIndexError: índice fora de [low; high]
    """
    if node.index is None or not low <= node.index <= high:
        raise ExpressionIndexError(
            f"{node.name}{node.index} fora de [{low};{high}]", node.span[0] if node.span else None
        )
    return node.index


def generators_in(expr: ElementExpr) -> list[Gen]:
    if isinstance(expr, Gen):
        return [expr]
    if isinstance(expr, Sum):
        return [g for t in expr.terms for g in generators_in(t)]
    if isinstance(expr, Product):
        return [g for f in expr.factors for g in generators_in(f)]
    return []


def words(expr: ElementExpr) -> Sequence:
    """Expande em lista de (escalares, geradores) sem avaliar"""
    if isinstance(expr, Sum):
        return [w for t in expr.terms for w in words(t)]
    if isinstance(expr, Product):
        out = [((), ())]
        for f in expr.factors:
            out = [(s1 + s2, g1 + g2) for s1, g1 in out for s2, g2 in words(f)]
        return out
    if isinstance(expr, Scalar):
        return [((expr.value,), ())]
    return [((), (expr,))]
