"""
Combinatória - permutações, composições, sequências de cores e classes laterais

Convenção interna: permutações em notação de uma linha 0-based; textos e índices
de geradores são 1-based.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from itertools import product
import re
from typing import Iterator, Optional, Sequence

from shared.algebra.errors import (
    BadParameter,
    BlockMismatch,
    ExpressionSyntaxError,
    IncompatibleSequences,
    NotMinimalRep,
    NotSubgroup,
)


# ============================================================================
# PERMUTAÇÕES
# ============================================================================

@dataclass(frozen=True, order=True)
class Permutation:
    """w ∈ S_n em notação de uma linha 0-based: images[i] = w(i)"""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise BadParameter(f"{self.images} não é uma permutação")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def simple(cls, n: int, r: int) -> "Permutation":
        """s_r (1-based): troca r e r+1"""
        if not 1 <= r < n:
            raise BadParameter(f"s_{r} fora de S_{n}")
        images = list(range(n))
        images[r - 1], images[r] = r, r - 1
        return cls(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Permutation":
        """Produto s_{k₁}⋯s_{k_r}"""
        result = cls.identity(n)
        for k in word:
            result = result * cls.simple(n, k)
        return result

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n - 1, -1, -1)))

    @classmethod
    def block_swap(cls, a: int, b: int) -> "Permutation":
        """w_{a,b}: i ↦ i+b para i ≤ a e i ↦ i−a para i > a"""
        return cls(tuple(i + b if i < a else i - a for i in range(a + b)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        match = re.fullmatch(r"\s*\[\s*([\d\s,]*)\]\s*", text)
        if not match:
            raise ExpressionSyntaxError(f"Permutação inválida: {text!r}", 0, text)
        body = match.group(1).strip()
        values = [int(v) - 1 for v in body.split(",")] if body else []
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(w·v)(i) = w(v(i))"""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        img = self.images
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if img[i] > img[j])

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def has_left_descent(self, r: int) -> bool:
        """l(s_r w) < l(w), r 1-based"""
        inv = self.inverse().images
        return inv[r] < inv[r - 1]

    def has_right_descent(self, r: int) -> bool:
        """l(w s_r) < l(w), r 1-based"""
        return self.images[r - 1] > self.images[r]

    def reduced_word(self) -> tuple[int, ...]:
        """Palavra reduzida lexicograficamente mínima (descidas à esquerda gulosas)"""
        word = []
        w = self
        while not w.is_identity():
            r = next(k for k in range(1, self.n) if w.has_left_descent(k))
            word.append(r)
            w = Permutation.simple(self.n, r) * w
        return tuple(word)

    def is_reduced_word(self, word: Sequence[int]) -> bool:
        return Permutation.from_word(self.n, word) == self and len(word) == self.length()

    def act_on_tuple(self, values: Sequence) -> tuple:
        """(w·t)_k = t_{w⁻¹(k)}"""
        out = [None] * self.n
        for i, v in enumerate(values):
            out[self.images[i]] = v
        return tuple(out)

    def shifted(self, offset: int, n: int) -> "Permutation":
        """Mergulha w nas posições offset..offset+len(w)−1 de S_n"""
        images = list(range(n))
        for i, j in enumerate(self.images):
            images[offset + i] = offset + j
        return Permutation(tuple(images))

    def format(self) -> str:
        return "[" + ",".join(str(i + 1) for i in self.images) + "]"

    __str__ = format


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """S_n ordenado por (comprimento, notação de uma linha)"""
    perms = [Permutation(p) for p in _itertools_permutations(range(n))]
    return tuple(sorted(perms, key=lambda w: (w.length(), w.images)))


# ============================================================================
# COMPOSIÇÕES
# ============================================================================

def _parse_int_tuple(text: str) -> tuple[int, ...]:
    match = re.fullmatch(r"\s*\(\s*([\d\s,]*)\)\s*", text)
    if not match:
        raise ExpressionSyntaxError(f"Tupla inválida: {text!r}", 0, text)
    body = match.group(1).strip()
    return tuple(int(v) for v in body.split(",")) if body else ()


@dataclass(frozen=True, order=True)
class Composition:
    """Partes positivas λ₁,…,λ_r com soma d"""
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise BadParameter(f"Composição com parte não positiva: {self.parts}")

    @classmethod
    def finest(cls, d: int) -> "Composition":
        return cls((1,) * d)

    @classmethod
    def coarsest(cls, d: int) -> "Composition":
        return cls((d,) if d else ())

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(_parse_int_tuple(text))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def blocks(self, offset: int = 0) -> list[tuple[int, ...]]:
        """Índices 0-based de cada bloco"""
        out, start = [], offset
        for p in self.parts:
            out.append(tuple(range(start, start + p)))
            start += p
        return out

    def block_ids(self) -> tuple[int, ...]:
        return tuple(b for b, p in enumerate(self.parts) for _ in range(p))

    def simple_reflections(self) -> list[int]:
        """r (1-based) com s_r ∈ S_λ"""
        ids = self.block_ids()
        return [r for r in range(1, self.total) if ids[r - 1] == ids[r]]

    def contains(self, w: Permutation) -> bool:
        ids = self.block_ids()
        return all(ids[i] == ids[j] for i, j in enumerate(w.images))

    def parabolic(self) -> list[Permutation]:
        """Elementos de S_λ ordenados por (comprimento, uma linha)"""
        n = self.total
        factors = [all_permutations(p) for p in self.parts]
        out = []
        for choice in product(*factors):
            images = []
            start = 0
            for p, w in zip(self.parts, choice):
                images.extend(start + j for j in w.images)
                start += p
            out.append(Permutation(tuple(images)))
        return sorted(out, key=lambda w: (w.length(), w.images)) if n else [Permutation(())]

    def longest(self) -> Permutation:
        images = []
        for block in self.blocks():
            images.extend(reversed(block))
        return Permutation(tuple(images))

    def refines(self, other: "Composition") -> bool:
        """S_self ⊆ S_other"""
        if self.total != other.total:
            return False
        mine, theirs = self.block_ids(), other.block_ids()
        return all(
            theirs[i] == theirs[i + 1] for i in range(self.total - 1) if mine[i] == mine[i + 1]
        )

    def shift(self, offset: int) -> list[tuple[int, ...]]:
        return self.blocks(offset)

    def format(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    __str__ = format


@dataclass(frozen=True, order=True)
class MultiComposition:
    """(ℓ+1)-composição λ = (λ^{(0)} | … | λ^{(ℓ)})"""
    components: tuple[Composition, ...]

    @classmethod
    def parse(cls, text: str) -> "MultiComposition":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ExpressionSyntaxError(f"Multicomposição inválida: {text!r}", 0, text)
        inner = text[1:-1]
        return cls(tuple(Composition.parse(part) for part in inner.split("|")))

    @classmethod
    def of(cls, *parts: Sequence[int]) -> "MultiComposition":
        return cls(tuple(Composition(tuple(p)) for p in parts))

    @property
    def level(self) -> int:
        return len(self.components) - 1

    @property
    def total(self) -> int:
        return sum(c.total for c in self.components)

    def bar(self) -> Composition:
        """Concatenação λ̄"""
        return Composition(tuple(p for c in self.components for p in c.parts))

    def color_seq(self) -> "ColorSeq":
        """Sequência de cores de e⁰(λ): um vermelho entre componentes consecutivas"""
        colors: list[int] = []
        for k, comp in enumerate(self.components):
            if k:
                colors.append(1)
            colors.extend([0] * comp.total)
        return ColorSeq(tuple(colors))

    def intervals(self) -> list[list[tuple[int, ...]]]:
        """[λ_r^{(k)}]: índices pretos 0-based por componente e parte"""
        out, start = [], 0
        for comp in self.components:
            out.append(comp.blocks(start))
            start += comp.total
        return out

    def component_offset(self, k: int) -> int:
        return sum(c.total for c in self.components[:k])

    def replace(self, k: int, comp: Composition) -> "MultiComposition":
        comps = list(self.components)
        comps[k] = comp
        return MultiComposition(tuple(comps))

    def format(self) -> str:
        return "(" + "|".join(c.format() for c in self.components) + ")"

    __str__ = format


def compositions_of(d: int) -> list[Composition]:
    if d == 0:
        return [Composition(())]
    out = []
    for first in range(1, d + 1):
        for rest in compositions_of(d - first):
            out.append(Composition((first,) + rest.parts))
    return out


def multicompositions(d: int, level: int) -> list[MultiComposition]:
    """𝒞^ℓ_d"""
    out = []

    def _rec(remaining: int, slots: int, acc: tuple):
        if slots == 1:
            for comp in compositions_of(remaining):
                out.append(MultiComposition(acc + (comp,)))
            return
        for total in range(remaining + 1):
            for comp in compositions_of(total):
                _rec(remaining - total, slots - 1, acc + (comp,))

    _rec(d, level + 1, ())
    return sorted(out)


# ============================================================================
# SEQUÊNCIAS DE CORES
# ============================================================================

@dataclass(frozen=True, order=True)
class ColorSeq:
    """c ∈ {0,1}^{ℓ+d}; 1 = vermelho, 0 = preto"""
    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.colors):
            raise BadParameter(f"Cores devem ser 0 ou 1: {self.colors}")

    @classmethod
    def parse(cls, text: str) -> "ColorSeq":
        text = text.strip()
        if not re.fullmatch(r"[rb]*", text):
            raise ExpressionSyntaxError(f"Sequência de cores inválida: {text!r}", 0, text)
        return cls(tuple(1 if ch == "r" else 0 for ch in text))

    @classmethod
    def omega(cls, level: int, d: int) -> "ColorSeq":
        return cls((1,) * level + (0,) * d)

    @classmethod
    def all(cls, level: int, d: int) -> list["ColorSeq"]:
        """J^{ℓ,d} em ordem lexicográfica decrescente (ω primeiro)"""
        n = level + d
        seqs = [
            cls(tuple(1 if i in reds else 0 for i in range(n)))
            for reds in _subsets(n, level)
        ]
        return sorted(seqs, reverse=True)

    @property
    def level(self) -> int:
        return sum(self.colors)

    @property
    def d(self) -> int:
        return len(self.colors) - self.level

    def __len__(self) -> int:
        return len(self.colors)

    def is_red(self, r: int) -> bool:
        return self.colors[r] == 1

    def black_positions(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == 0]

    def red_positions(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == 1]

    def black_index(self, r: int) -> Optional[int]:
        """t (0-based) tal que a posição r é o t-ésimo preto"""
        if self.colors[r]:
            return None
        return sum(1 for c in self.colors[:r] if c == 0)

    def reds_up_to(self, r: int) -> int:
        """Σ_{j ≤ r} c_j (r 0-based, inclusivo)"""
        return sum(self.colors[: r + 1])

    def swap(self, r: int) -> "ColorSeq":
        """s_r aplicado nas posições r, r+1 (0-based)"""
        colors = list(self.colors)
        colors[r], colors[r + 1] = colors[r + 1], colors[r]
        return ColorSeq(tuple(colors))

    def format(self) -> str:
        return "".join("r" if c else "b" for c in self.colors)

    __str__ = format


def _subsets(n: int, k: int) -> Iterator[frozenset]:
    from itertools import combinations

    for combo in combinations(range(n), k):
        yield frozenset(combo)


@dataclass(frozen=True)
class ColoredPermutation:
    """(b, c, w): bloco P(c) → P(b) com permutação preta w"""
    target: ColorSeq
    source: ColorSeq
    black: Permutation

    def __post_init__(self):
        if self.target.level != self.source.level or self.target.d != self.source.d:
            raise IncompatibleSequences(f"{self.target} e {self.source} não estão na mesma órbita")
        if self.black.n != self.source.d:
            raise IncompatibleSequences(f"Permutação {self.black} não age em {self.source.d} pretos")

    def full_permutation(self) -> Permutation:
        """π(b,c,w) ∈ S_{ℓ+d}"""
        n = len(self.source)
        images = [0] * n
        src_red, tgt_red = self.source.red_positions(), self.target.red_positions()
        src_black, tgt_black = self.source.black_positions(), self.target.black_positions()
        for i, j in zip(src_red, tgt_red):
            images[i] = j
        for t, pos in enumerate(src_black):
            images[pos] = tgt_black[self.black(t)]
        return Permutation(tuple(images))

    def compose(self, other: "ColoredPermutation") -> "ColoredPermutation":
        return colored_perm_compose(self, other)

    def format(self) -> str:
        return f"{self.target.format()}<-{self.source.format()}:{self.black.format()}"


def colored_perm_compose(g: ColoredPermutation, h: ColoredPermutation) -> ColoredPermutation:
    """
    g∘h; exige origem de g = alvo de h

    Raises:
        BlockMismatch: blocos incompatíveis
    """
    if g.source != h.target:
        raise BlockMismatch(f"Origem {g.source} ≠ alvo {h.target}")
    return ColoredPermutation(g.target, h.source, g.black * h.black)


# ============================================================================
# CLASSES LATERAIS E PARABÓLICOS
# ============================================================================

def _is_minimal(w: Permutation, lam: Composition, mu: Composition) -> bool:
    return not any(w.has_left_descent(r) for r in lam.simple_reflections()) and not any(
        w.has_right_descent(r) for r in mu.simple_reflections()
    )


def coset_reps(
    lam: Composition,
    mu: Optional[Composition] = None,
    ambient: Optional[Composition] = None,
) -> list[Permutation]:
    """
    D_{λ,μ}: representantes de comprimento mínimo de S_λ\\S_d/S_μ

    Args:
        lam: λ
        mu: μ (None = composição trivial, D_{λ,∅})
        ambient: ν opcional; devolve D^ν_{λ,μ} = S_ν ∩ D_{λ,μ}

    Raises:
        NotSubgroup: S_λ ou S_μ não contido em S_ν
    """
    d = lam.total
    mu = mu if mu is not None else Composition.finest(d)
    if mu.total != d:
        raise BadParameter(f"{lam} e {mu} têm totais diferentes")
    if ambient is not None and not (lam.refines(ambient) and mu.refines(ambient)):
        raise NotSubgroup(f"S_{lam} ou S_{mu} não está contido em S_{ambient}")
    return [
        w
        for w in all_permutations(d)
        if _is_minimal(w, lam, mu) and (ambient is None or ambient.contains(w))
    ]


def intersect_parabolic(lam: Composition, mu: Composition, w: Permutation) -> Composition:
    """
    κ com S_κ = S_λ ∩ w S_μ w⁻¹

    Raises:
        NotMinimalRep: w ∉ D_{λ,μ}
    """
    if not _is_minimal(w, lam, mu):
        raise NotMinimalRep(f"{w} não é representante mínimo de S_{lam}\\S/S_{mu}")
    d = lam.total
    if d == 0:
        return Composition(())
    lam_ids, mu_ids = lam.block_ids(), mu.block_ids()
    inv = w.inverse()
    parts, run = [], 1
    for i in range(d - 1):
        joined = lam_ids[i] == lam_ids[i + 1] and mu_ids[inv(i)] == mu_ids[inv(i + 1)]
        if joined:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def refine_by_exponents(lam: Composition, exps: Sequence[int]) -> Composition:
    """λ∩p: quebra cada bloco onde o expoente muda"""
    parts = []
    for block in lam.blocks():
        run = 1
        for a, b in zip(block, block[1:]):
            if exps[a] == exps[b]:
                run += 1
            else:
                parts.append(run)
                run = 1
        if block:
            parts.append(run)
    return Composition(tuple(parts))


def dominant_monomials(lam: Composition, bound: int) -> list[tuple[tuple[int, ...], Composition]]:
    """
    Monômios de 𝒳_λ^+ com expoentes em [−B;B], com λ∩p

    Args:
        lam: λ
        bound: B ≥ 0

    Returns:
        Lista de (expoentes, λ∩p)
    """
    if bound < 0:
        raise BadParameter("Janela B deve ser ≥ 0")
    per_block = []
    for size in lam.parts:
        seqs = [
            s for s in product(range(-bound, bound + 1), repeat=size)
            if all(s[i] <= s[i + 1] for i in range(size - 1))
        ]
        per_block.append(seqs)
    out = []
    for choice in product(*per_block):
        exps = tuple(a for block in choice for a in block)
        out.append((exps, refine_by_exponents(lam, exps)))
    return out


def orbit(exps: Sequence[int], lam: Composition) -> list[tuple[int, ...]]:
    """Órbita de um vetor de expoentes sob S_λ, ordenada"""
    seen = {tuple(w.act_on_tuple(exps)) for w in lam.parabolic()}
    return sorted(seen)
