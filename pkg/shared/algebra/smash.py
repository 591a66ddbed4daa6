"""
Operadores smash - somas finitas Σ C_w·w por bloco

Um SmashOperator guarda, para cada par (bloco alvo, bloco origem), um mapa
permutação → função racional. A componente P(c) → P(b) age por f ↦ Σ_w C_w · w(f).
Composição: (C·w)∘(D·v) = C·w(D)·(wv).
"""
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence, Union

from shared.algebra.combinatorics import Permutation
from shared.algebra.laurent import LaurentPoly, PolynomialRing
from shared.algebra.rational import RationalFunction
from shared.algebra.scalars import Scalar

Block = Hashable
BlockPair = tuple[Block, Block]


@dataclass(frozen=True)
class PointBlock:
    """Bloco base (sequência de cores, multicomposição) refinado por um ponto ou rótulos"""
    base: Any
    point: tuple

    def format(self, fmt: Callable[[Scalar], str] = str) -> str:
        return f"{_format_block(self.base)}@[{','.join(fmt(p) for p in self.point)}]"

    def __str__(self) -> str:
        return self.format()


def _format_block(block: Block) -> str:
    fmt = getattr(block, "format", None)
    return fmt() if callable(fmt) else str(block)


def block_key(block: Block) -> str:
    return _format_block(block)


class SmashOperator:
    """Operador exato em ⊕_blocos k(x)"""

    __slots__ = ("ring", "components")

    def __init__(self, ring: PolynomialRing, components: Optional[dict] = None):
        self.ring = ring
        self.components: dict[BlockPair, dict[Permutation, RationalFunction]] = components or {}

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, ring: PolynomialRing) -> "SmashOperator":
        return cls(ring, {})

    @classmethod
    def single(cls, ring: PolynomialRing, target: Block, source: Block,
               perm: Permutation, coeff: Union[RationalFunction, LaurentPoly, Any]) -> "SmashOperator":
        coeff = _as_rf(ring, coeff)
        if coeff.is_zero():
            return cls.zero(ring)
        return cls(ring, {(target, source): {perm: coeff}})

    @classmethod
    def diagonal(cls, ring: PolynomialRing, coeffs: Mapping[Block, Any]) -> "SmashOperator":
        """Multiplicação por coeficiente em cada bloco"""
        identity = Permutation.identity(ring.nvars)
        components = {}
        for block, coeff in coeffs.items():
            coeff = _as_rf(ring, coeff)
            if not coeff.is_zero():
                components[(block, block)] = {identity: coeff}
        return cls(ring, components)

    @classmethod
    def identity(cls, ring: PolynomialRing, blocks: Iterable[Block]) -> "SmashOperator":
        return cls.diagonal(ring, {b: 1 for b in blocks})

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c.is_zero() for comp in self.components.values() for c in comp.values())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def terms(self) -> Iterator[tuple[Block, Block, Permutation, RationalFunction]]:
        """(alvo, origem, w, C_w) em ordem determinística"""
        for (b, c) in sorted(self.components, key=lambda bc: (block_key(bc[0]), block_key(bc[1]))):
            comp = self.components[(b, c)]
            for w in sorted(comp, key=lambda w: (w.length(), w.images)):
                yield b, c, w, comp[w]

    def coefficient(self, target: Block, source: Block, perm: Permutation) -> RationalFunction:
        comp = self.components.get((target, source), {})
        return comp.get(perm, RationalFunction.const(self.ring, 0))

    def sources(self) -> set:
        return {c for (_, c) in self.components}

    def targets(self) -> set:
        return {b for (b, _) in self.components}

    def restrict(self, sources: Optional[Iterable[Block]] = None,
                 targets: Optional[Iterable[Block]] = None) -> "SmashOperator":
        src = set(sources) if sources is not None else None
        tgt = set(targets) if targets is not None else None
        return SmashOperator(self.ring, {
            (b, c): dict(comp)
            for (b, c), comp in self.components.items()
            if (src is None or c in src) and (tgt is None or b in tgt)
        })

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other: "SmashOperator") -> "SmashOperator":
        if not isinstance(other, SmashOperator):
            return NotImplemented
        components = {bc: dict(comp) for bc, comp in self.components.items()}
        for bc, comp in other.components.items():
            target = components.setdefault(bc, {})
            for w, coeff in comp.items():
                s = target.get(w)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    target.pop(w, None)
                else:
                    target[w] = s
            if not target:
                del components[bc]
        return SmashOperator(self.ring, components)

    def __neg__(self) -> "SmashOperator":
        return self.scale(-1)

    def __sub__(self, other: "SmashOperator") -> "SmashOperator":
        return self + (-other)

    def scale(self, c: Any) -> "SmashOperator":
        c = self.ring.field(c)
        if not c:
            return SmashOperator.zero(self.ring)
        return SmashOperator(self.ring, {
            bc: {w: coeff * c for w, coeff in comp.items()} for bc, comp in self.components.items()
        })

    def __mul__(self, other: Any) -> "SmashOperator":
        """Composição self∘other"""
        if not isinstance(other, SmashOperator):
            return self.scale(other)
        by_target: dict = {}
        for (c, a), comp in other.components.items():
            by_target.setdefault(c, []).append((a, comp))
        out: dict = {}
        for (b, c), left in self.components.items():
            for a, right in by_target.get(c, ()):
                acc = out.setdefault((b, a), {})
                for w, C in left.items():
                    for v, D in right.items():
                        term = C * D.permute(w.images)
                        if term.is_zero():
                            continue
                        wv = w * v
                        s = acc.get(wv)
                        acc[wv] = term if s is None else s + term
        components = {}
        for bc, acc in out.items():
            clean = {w: coeff for w, coeff in acc.items() if not coeff.is_zero()}
            if clean:
                components[bc] = clean
        return SmashOperator(self.ring, components)

    def __rmul__(self, other: Any) -> "SmashOperator":
        return self.scale(other)

    def __pow__(self, n: int) -> "SmashOperator":
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SmashOperator):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def commutator(self, other: "SmashOperator") -> "SmashOperator":
        return self * other - other * self

    # ------------------------------------------------------------------
    # Ação
    # ------------------------------------------------------------------

    def apply(self, source: Block, f: Union[LaurentPoly, RationalFunction]) -> dict[Block, RationalFunction]:
        """Aplica a componente com origem `source` a f"""
        f = _as_rf(self.ring, f)
        out: dict = {}
        for (b, c), comp in self.components.items():
            if c != source:
                continue
            for w, coeff in comp.items():
                term = coeff * f.permute(w.images)
                out[b] = term if b not in out else out[b] + term
        return {b: v for b, v in out.items() if not v.is_zero()}

    def act(self, vector: Mapping[Block, Union[LaurentPoly, RationalFunction]]) -> dict[Block, RationalFunction]:
        """Aplica a um vetor {bloco: f}"""
        out: dict = {}
        for block, f in vector.items():
            for b, value in self.apply(block, f).items():
                out[b] = value if b not in out else out[b] + value
        return {b: v for b, v in out.items() if not v.is_zero()}

    def map_coefficients(self, fn: Callable[[Block, Block, Permutation, RationalFunction], RationalFunction],
                         ring: Optional[PolynomialRing] = None) -> "SmashOperator":
        components = {}
        for (b, c), comp in self.components.items():
            new = {}
            for w, coeff in comp.items():
                value = fn(b, c, w, coeff)
                if not value.is_zero():
                    new[w] = value
            if new:
                components[(b, c)] = new
        return SmashOperator(ring or self.ring, components)

    def map_blocks(self, fn: Callable[[Block], Block]) -> "SmashOperator":
        result = SmashOperator.zero(self.ring)
        for (b, c), comp in self.components.items():
            result = result + SmashOperator(self.ring, {(fn(b), fn(c)): dict(comp)})
        return result

    def normalize(self) -> "SmashOperator":
        return self.map_coefficients(lambda b, c, w, coeff: coeff.normalize())

    def preserves_laurent(self, probes: Sequence[LaurentPoly]) -> bool:
        """Cada componente leva as sondas em polinômios de Laurent"""
        for source in self.sources():
            for f in probes:
                for value in self.apply(source, f).values():
                    if not value.is_laurent():
                        return False
        return True

    def format(self) -> str:
        if self.is_zero():
            return "0"
        lines = []
        for b, c, w, coeff in self.terms():
            lines.append(f"[{block_key(b)} <- {block_key(c)}] ({coeff.format()})*{w.format()}")
        return "\n".join(lines)

    __str__ = format

    def __repr__(self) -> str:
        return f"SmashOperator({len(self.components)} blocos)"


def _as_rf(ring: PolynomialRing, value: Any) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunction.from_poly(value)
    return RationalFunction.const(ring, value)


def operator_sum(ring: PolynomialRing, operators: Iterable[SmashOperator]) -> SmashOperator:
    total = SmashOperator.zero(ring)
    for op in operators:
        total = total + op
    return total
