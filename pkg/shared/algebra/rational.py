"""
Funções racionais preguiçosas num/den sobre polinômios de Laurent

A normalização por mdc (sympy) só roda quando o número de termos passa do limiar;
igualdade é por multiplicação cruzada.
"""
from functools import lru_cache
from typing import Any, Sequence

from sympy.polys.rings import PolyRing

from shared.algebra.errors import DivisionByZero, NotLaurent
from shared.algebra.laurent import LaurentPoly, PolynomialRing
from shared.algebra.scalars import Field, Scalar

NORMALIZE_THRESHOLD = 40


@lru_cache(maxsize=None)
def _sympy_ring(field: Field, nvars: int) -> PolyRing:
    return PolyRing([f"t{k}" for k in range(max(nvars, 1))], field.domain)


def _to_sympy(poly: LaurentPoly, base: Sequence[int]):
    R = _sympy_ring(poly.field, poly.ring.nvars)
    return R.from_dict({tuple(a - b for a, b in zip(exps, base)): c for exps, c in poly.terms.items()})


def _from_sympy(element, ring: PolynomialRing) -> LaurentPoly:
    return LaurentPoly(ring, {tuple(int(a) for a in exps): c for exps, c in element.items() if c})


def cancel(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """
    Forma reduzida de num/den com denominador polinomial de coeficiente líder 1

    Returns:
        (num, den) sem fatores comuns e sem conteúdo monomial no denominador
    """
    ring = num.ring
    if num.is_zero():
        return ring.zero, ring.one
    if den.is_monomial():
        (exps, c), = den.terms.items()
        inv = ring.field.inv(c)
        return num.shift([-e for e in exps]).scale(inv), ring.one
    if ring.nvars == 0:
        c = den.constant_term()
        return num.scale(ring.field.inv(c)), ring.one

    nmin, dmin = num.min_exponents(), den.min_exponents()
    p, q = _to_sympy(num, nmin), _to_sympy(den, dmin)
    p, q = p.cancel(q)
    lc = q.LC
    if lc != ring.field.one:
        inv = ring.field.inv(lc)
        p, q = p.mul_ground(inv), q.mul_ground(inv)
    shift = [a - b for a, b in zip(nmin, dmin)]
    return _from_sympy(p, ring).shift(shift), _from_sympy(q, ring)


class RationalFunction:
    """Fração num/den de polinômios de Laurent no mesmo anel"""

    __slots__ = ("num", "den", "_normal")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None, normal: bool = False):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise DivisionByZero("Denominador nulo")
        self.num = num
        self.den = den
        self._normal = normal or den.is_constant() and den.constant_term() == num.field.one

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "RationalFunction":
        return cls(poly, poly.ring.one, normal=True)

    @classmethod
    def const(cls, ring: PolynomialRing, c: Any) -> "RationalFunction":
        return cls(ring.const(c), ring.one, normal=True)

    @property
    def ring(self) -> PolynomialRing:
        return self.num.ring

    @property
    def field(self) -> Field:
        return self.num.ring.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def size(self) -> int:
        return len(self.num) + len(self.den)

    # ------------------------------------------------------------------
    # Normalização
    # ------------------------------------------------------------------

    def normalize(self) -> "RationalFunction":
        if self._normal:
            return self
        num, den = cancel(self.num, self.den)
        return RationalFunction(num, den, normal=True)

    def _maybe_normalize(self) -> "RationalFunction":
        if not self._normal and self.size() > NORMALIZE_THRESHOLD:
            return self.normalize()
        return self

    def is_laurent(self) -> bool:
        return self.normalize().den.is_monomial()

    def to_laurent(self) -> LaurentPoly:
        """
        Returns:
            O polinômio de Laurent igual a esta fração

        Raises:
            NotLaurent: denominador não é monômio após normalização
        """
        if self.den.is_monomial():
            (exps, c), = self.den.terms.items()
            return self.num.shift([-e for e in exps]).scale(self.field.inv(c))
        rf = self.normalize()
        if not rf.den.is_monomial():
            raise NotLaurent(f"({rf.num}) / ({rf.den}) não é polinômio de Laurent")
        (exps, c), = rf.den.terms.items()
        return rf.num.shift([-e for e in exps]).scale(self.field.inv(c))

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _coerce(self, other: Any) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_poly(other)
        return RationalFunction.const(self.ring, other)

    def __add__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)._maybe_normalize()
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )._maybe_normalize()

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, normal=self._normal)

    def __sub__(self, other: Any) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, (RationalFunction, LaurentPoly)):
            c = self.field(other)
            return RationalFunction(self.num.scale(c), self.den, normal=self._normal)
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.const(self.ring, 0)
        if other.den.is_constant() and other.den.constant_term() == self.field.one:
            return RationalFunction(self.num * other.num, self.den)._maybe_normalize()
        if self.den.is_constant() and self.den.constant_term() == self.field.one:
            return RationalFunction(self.num * other.num, other.den)._maybe_normalize()
        return RationalFunction(self.num * other.num, self.den * other.den)._maybe_normalize()

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("Inversão de função racional nula")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: Any) -> "RationalFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other: object) -> bool:
        try:
            other = self._coerce(other)
        except Exception:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # ------------------------------------------------------------------
    # Ação de permutações e avaliação
    # ------------------------------------------------------------------

    def permute(self, images: Sequence[int]) -> "RationalFunction":
        return RationalFunction(self.num.permute(images), self.den.permute(images), normal=self._normal)

    def swap(self, r: int) -> "RationalFunction":
        return RationalFunction(self.num.swap(r), self.den.swap(r), normal=self._normal)

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        rf = self.normalize()
        den = rf.den.evaluate(point)
        if not den:
            raise DivisionByZero("Denominador se anula no ponto")
        return self.field.div(rf.num.evaluate(point), den)

    def is_regular_at(self, point: Sequence[Scalar]) -> bool:
        return bool(self.normalize().den.evaluate(point))

    def substitute(self, images: Sequence["RationalFunction"]) -> "RationalFunction":
        """x_k ↦ images[k]; as imagens vivem em outro anel"""
        target = images[0].ring

        def _sub(poly: LaurentPoly) -> RationalFunction:
            total = RationalFunction.const(target, 0)
            powers: dict = {}
            for exps, c in poly.terms.items():
                term = RationalFunction.const(target, c)
                for k, a in enumerate(exps):
                    if a:
                        if (k, a) not in powers:
                            powers[(k, a)] = images[k] ** a
                        term = term * powers[(k, a)]
                total = total + term
            return total

        return _sub(self.num) / _sub(self.den)

    def format(self) -> str:
        rf = self.normalize()
        if rf.den.is_constant() and rf.den.constant_term() == self.field.one:
            return rf.num.format()
        return f"({rf.num.format()}) / ({rf.den.format()})"

    __str__ = format

    def __repr__(self) -> str:
        return f"RationalFunction({self.format()!r})"
