"""
Jatos - séries de potências truncadas em (x_r − i_r), grau total < N
"""
from math import factorial
from typing import Any, Sequence, Union

from shared.algebra.errors import BadParameter, DivisionByZero, PoleAtPoint
from shared.algebra.laurent import LaurentPoly
from shared.algebra.rational import RationalFunction
from shared.algebra.scalars import Field, Scalar

Monomial = tuple[int, ...]


def _binomial(a: int, j: int) -> int:
    """C(a, j) para a inteiro qualquer (inclusive negativo)"""
    num = 1
    for t in range(j):
        num *= a - t
    return num // factorial(j)


class Jet:
    """Polinômio truncado nas variáveis deslocadas u_k = x_k − i_k"""

    __slots__ = ("field", "point", "order", "terms")

    def __init__(self, field: Field, point: Sequence[Scalar], order: int, terms: dict):
        if order < 1:
            raise BadParameter(f"Ordem N = {order} deve ser ≥ 1")
        self.field = field
        self.point = tuple(point)
        self.order = order
        self.terms = terms

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @classmethod
    def const(cls, field: Field, point: Sequence[Scalar], order: int, c: Any) -> "Jet":
        c = field(c)
        n = len(point)
        return cls(field, point, order, {(0,) * n: c} if c else {})

    @classmethod
    def shifted_variable(cls, field: Field, point: Sequence[Scalar], order: int, k: int) -> "Jet":
        """u_k = x_k − i_k (k 0-based)"""
        if order == 1:
            return cls(field, point, order, {})
        exps = [0] * len(point)
        exps[k] = 1
        return cls(field, point, order, {tuple(exps): field.one})

    @classmethod
    def monomial(cls, field: Field, point: Sequence[Scalar], order: int, exps: Sequence[int]) -> "Jet":
        """u^m, zero se |m| ≥ N"""
        if sum(exps) >= order:
            return cls(field, point, order, {})
        return cls(field, point, order, {tuple(exps): field.one})

    def _like(self, terms: dict) -> "Jet":
        return Jet(self.field, self.point, self.order, terms)

    def _check(self, other: "Jet") -> None:
        if other.point != self.point or other.order != self.order:
            raise BadParameter("Jatos em pontos ou ordens diferentes")

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.point)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), self.field.zero)

    def truncate(self, order: int) -> "Jet":
        return Jet(
            self.field, self.point, order,
            {e: c for e, c in self.terms.items() if sum(e) < order},
        )

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other: Any) -> "Jet":
        if not isinstance(other, Jet):
            other = Jet.const(self.field, self.point, self.order, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Jet":
        if not isinstance(other, Jet):
            other = Jet.const(self.field, self.point, self.order, other)
        return self + (-other)

    def scale(self, c: Scalar) -> "Jet":
        c = self.field(c)
        if not c:
            return self._like({})
        return self._like({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: Any) -> "Jet":
        if not isinstance(other, Jet):
            return self.scale(other)
        self._check(other)
        n = self.order
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) >= n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return self._like({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        """
        Série geométrica: 1/(c(1+g)) = c⁻¹ Σ_{k<N} (−g)^k

        Raises:
            DivisionByZero: termo constante nulo
        """
        c = self.constant_term()
        if not c:
            raise DivisionByZero("Jato com termo constante nulo não é invertível")
        cinv = self.field.inv(c)
        g = (self.scale(cinv) - 1)
        minus_g = -g
        total = Jet.const(self.field, self.point, self.order, 1)
        power = total
        for _ in range(1, self.order):
            power = power * minus_g
            if power.is_zero():
                break
            total = total + power
        return total.scale(cinv)

    def __pow__(self, n: int) -> "Jet":
        if n < 0:
            return self.inverse() ** (-n)
        result = Jet.const(self.field, self.point, self.order, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Jet):
            return self.point == other.point and self.order == other.order and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def permute(self, images: Sequence[int]) -> "Jet":
        """w(x_i) = x_{w(i)}; o ponto vai para w·i"""
        n = self.nvars
        point = [None] * n
        for i, p in enumerate(self.point):
            point[images[i]] = p
        out = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for i, a in enumerate(exps):
                new[images[i]] = a
            out[tuple(new)] = c
        return Jet(self.field, point, self.order, out)

    # ------------------------------------------------------------------
    # Impressão
    # ------------------------------------------------------------------

    def format(self, prefix: str = "x") -> str:
        if not self.terms:
            return "0"
        fmt = self.field.format
        parts = []
        for exps, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0]))):
            factors = []
            for k, a in enumerate(exps):
                if a:
                    shift = f"({prefix}{k + 1}-{fmt(self.point[k])})"
                    factors.append(shift if a == 1 else f"{shift}^{a}")
            negative = self.field.is_negative(c)
            mag = -c if negative else c
            if not factors:
                body = fmt(mag)
            elif mag == self.field.one:
                body = "*".join(factors)
            else:
                body = f"{fmt(mag)}*" + "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    __str__ = format

    def __repr__(self) -> str:
        return f"Jet({self.format()!r})"


def _linear_power_series(field: Field, p: Scalar, a: int, order: int) -> list[Scalar]:
    """Coeficientes de (p + u)^a até u^{N−1}"""
    coeffs = []
    for j in range(order):
        if a >= 0 and j > a:
            coeffs.append(field.zero)
            continue
        coeffs.append(field(_binomial(a, j)) * field.power(p, a - j))
    return coeffs


def poly_to_jet(f: LaurentPoly, point: Sequence[Scalar], order: int) -> Jet:
    field = f.field
    n = len(point)
    for k, (p, lo) in enumerate(zip(point, f.min_exponents())):
        if lo < 0 and not p:
            raise PoleAtPoint(f"x{k + 1} com expoente negativo em ponto nulo")
    series_cache: dict = {}
    total = Jet.const(field, point, order, 0)
    for exps, c in f.terms.items():
        term = Jet.const(field, point, order, c)
        for k, a in enumerate(exps):
            if not a:
                continue
            key = (k, a)
            if key not in series_cache:
                coeffs = _linear_power_series(field, point[k], a, order)
                terms = {}
                for j, cj in enumerate(coeffs):
                    if cj:
                        e = [0] * n
                        e[k] = j
                        terms[tuple(e)] = cj
                series_cache[key] = Jet(field, point, order, terms)
            term = term * series_cache[key]
        total = total + term
    return total


def expand_to_jet(f: Union[RationalFunction, LaurentPoly], point: Sequence[Scalar], order: int) -> Jet:
    """
    Expande f em série truncada no ponto

    Args:
        f: Função racional ou polinômio de Laurent
        point: Ponto i (d-upla)
        order: N ≥ 1

    Returns:
        Jato de f em i até grau total < N

    Raises:
        PoleAtPoint: denominador reduzido se anula no ponto
    """
    if isinstance(f, LaurentPoly):
        return poly_to_jet(f, point, order)
    f = f.normalize()
    den = poly_to_jet(f.den, point, order)
    if not den.constant_term():
        raise PoleAtPoint(f"Denominador {f.den} se anula em {tuple(f.field.format(p) for p in point)}")
    return poly_to_jet(f.num, point, order) * den.inverse()
