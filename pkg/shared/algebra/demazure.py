"""
Operadores de Demazure e polinômios seta

∂_r(f) = (f − s_r f)/(x_r − x_{r+1}) calculado monômio a monômio por fórmula fechada.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from shared.algebra.combinatorics import Composition, Permutation
from shared.algebra.errors import BadParameter, NonReducedWord
from shared.algebra.laurent import LaurentPoly, PolynomialRing
from shared.algebra.scalars import Scalar


def demazure(r: int, f: LaurentPoly) -> LaurentPoly:
    """
    ∂_r aplicado a f (r 1-based)

    Args:
        r: 1 ≤ r ≤ n−1
        f: Polinômio de Laurent

    Returns:
        Quociente exato (f − s_r f)/(x_r − x_{r+1})
    """
    ring = f.ring
    if not 1 <= r < ring.nvars:
        raise BadParameter(f"∂_{r} fora de [1;{ring.nvars - 1}]")
    i, j = r - 1, r
    out: dict = {}
    for exps, c in f.terms.items():
        alpha, beta = exps[i], exps[j]
        if alpha == beta:
            continue
        sign = 1 if alpha > beta else -1
        low, gap = min(alpha, beta), abs(alpha - beta)
        for k in range(gap):
            e = list(exps)
            e[i] = low + gap - 1 - k
            e[j] = low + k
            e = tuple(e)
            value = c if sign > 0 else -c
            s = out.get(e)
            out[e] = value if s is None else s + value
    return LaurentPoly(ring, {e: c for e, c in out.items() if c})


@dataclass(frozen=True)
class DemazurePlan:
    """w com palavra reduzida escolhida; ∂_w = ∂_{k₁}⋯∂_{k_r}"""
    perm: Permutation
    word: tuple[int, ...]

    @classmethod
    def for_permutation(cls, w: Permutation, word: Optional[Sequence[int]] = None) -> "DemazurePlan":
        """
        Raises:
            NonReducedWord: palavra não reduzida ou de outra permutação
        """
        if word is None:
            return cls(w, w.reduced_word())
        word = tuple(word)
        if not w.is_reduced_word(word):
            raise NonReducedWord(f"{word} não é palavra reduzida de {w}")
        return cls(w, word)

    @classmethod
    def longest(cls, d: int) -> "DemazurePlan":
        """D_d = ∂_{w_d}"""
        return cls.for_permutation(Permutation.longest(d))

    @classmethod
    def block_swap(cls, a: int, b: int) -> "DemazurePlan":
        """D_{a,b} = ∂_{w_{a,b}}"""
        return cls.for_permutation(Permutation.block_swap(a, b))

    def apply(self, f: LaurentPoly, offset: int = 0) -> LaurentPoly:
        """Aplica nas variáveis offset+1, offset+2, …"""
        for k in reversed(self.word):
            f = demazure(k + offset, f)
        return f


def demazure_composite(plan: DemazurePlan, f: LaurentPoly) -> LaurentPoly:
    return plan.apply(f)


def demazure_on_positions(plan: DemazurePlan, f: LaurentPoly, positions: Sequence[int]) -> LaurentPoly:
    """
    Aplica ∂_w nas variáveis listadas (0-based, crescentes), não necessariamente contíguas
    """
    ring = f.ring
    others = [k for k in range(ring.nvars) if k not in set(positions)]
    order = list(positions) + others
    # posições listadas vão para 0..len(positions)−1
    forward = [0] * ring.nvars
    for new, old in enumerate(order):
        forward[old] = new
    backward = [order[k] for k in range(ring.nvars)]
    g = plan.apply(f.permute(forward))
    return g.permute(backward)


def symmetrize(f: LaurentPoly, lam: Composition) -> LaurentPoly:
    """Sym_λ(f) = Σ_{u ∈ S_λ} u(f)"""
    total = f.ring.zero
    for u in lam.parabolic():
        total = total + f.permute(u.images)
    return total


# ============================================================================
# POLINÔMIOS SETA
# ============================================================================

def _product(ring: PolynomialRing, pairs, q: Scalar, reverse: bool) -> LaurentPoly:
    result = ring.one
    for i, j in pairs:
        xi, xj = ring.gen(i + 1), ring.gen(j + 1)
        result = result * ((xj - xi.scale(q)) if reverse else (xi - xj.scale(q)))
    return result


def same_block_pairs(lam: Composition, offset: int = 0) -> list[tuple[int, int]]:
    return [pair for block in lam.blocks(offset) for pair in combinations(block, 2)]


def cross_block_pairs(lam: Composition, offset: int = 0) -> list[tuple[int, int]]:
    blocks = lam.blocks(offset)
    return [
        (i, j)
        for b1 in range(len(blocks))
        for b2 in range(b1 + 1, len(blocks))
        for i in blocks[b1]
        for j in blocks[b2]
    ]


def arrow_right(ring: PolynomialRing, lam: Composition, q: Scalar, offset: int = 0) -> LaurentPoly:
    """p⃗_λ = Π (x_i − q x_j), i < j no mesmo bloco"""
    return _product(ring, same_block_pairs(lam, offset), q, reverse=False)


def arrow_left(ring: PolynomialRing, lam: Composition, q: Scalar, offset: int = 0) -> LaurentPoly:
    """p̄_λ = Π (x_j − q x_i), i < j no mesmo bloco"""
    return _product(ring, same_block_pairs(lam, offset), q, reverse=True)


def arrow_right_prime(ring: PolynomialRing, a: int, b: int, q: Scalar, offset: int = 0) -> LaurentPoly:
    """p⃗′_{a,b} = Π_{i ≤ a < j} (x_i − q x_j)"""
    return _product(ring, cross_block_pairs(Composition((a, b)), offset), q, reverse=False)


def arrow_left_prime(ring: PolynomialRing, a: int, b: int, q: Scalar, offset: int = 0) -> LaurentPoly:
    """p̄′_{a,b} = Π_{i ≤ a < j} (x_j − q x_i)"""
    return _product(ring, cross_block_pairs(Composition((a, b)), offset), q, reverse=True)


def arrow_left_complement(ring: PolynomialRing, lam: Composition, q: Scalar, offset: int = 0) -> LaurentPoly:
    """p̄′_λ: pares em blocos diferentes, com p̄_λ·p̄′_λ = p̄_d"""
    return _product(ring, cross_block_pairs(lam, offset), q, reverse=True)


def arrow_polys(ring: PolynomialRing, kind: str, q: Scalar, lam: Optional[Composition] = None,
                a: int = 0, b: int = 0, offset: int = 0) -> LaurentPoly:
    """
    Fachada única para os polinômios seta

    Args:
        kind: 'right', 'left', 'right_prime', 'left_prime' ou 'left_complement'
    """
    builders = {
        "right": lambda: arrow_right(ring, lam, q, offset),
        "left": lambda: arrow_left(ring, lam, q, offset),
        "right_prime": lambda: arrow_right_prime(ring, a, b, q, offset),
        "left_prime": lambda: arrow_left_prime(ring, a, b, q, offset),
        "left_complement": lambda: arrow_left_complement(ring, lam, q, offset),
    }
    if kind not in builders:
        raise BadParameter(f"Tipo de polinômio seta desconhecido: {kind}")
    return builders[kind]()
