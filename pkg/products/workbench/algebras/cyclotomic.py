"""
Quocientes ciclotômicos - dimensão por janela de expoentes com certificado de estabilização

A janela V_B é gerada pelos elementos de base T_w^{b,c} x^m com m ∈ [−B;B]^d.
O ideal é fechado por multiplicação à esquerda e à direita pelos geradores,
descartando produtos que saem da janela. Método heurístico: o relatório só é
aceito quando a dimensão em B coincide com a de B − 1.
"""
from dataclasses import dataclass, field as dc_field
from enum import Enum
from itertools import permutations, product
from typing import Any, Iterable, Optional, Sequence

from sympy import Poly, Symbol

from shared.algebra.combinatorics import ColorSeq, Permutation
from shared.algebra.errors import BadParameter, IncompatibleSequences, NotInAlgebra, WindowNotStabilized
from shared.algebra.linalg import charpoly, rref
from shared.algebra.scalars import Scalar, ValidatedConfig
from shared.algebra.smash import SmashOperator
from shared.handlers.logging_config import get_logger
from products.workbench.algebras.hecke import BasisKey, HeckeAlgebra
from products.workbench.algebras.klr import build_quiver
from products.workbench.reports import CheckResult, Stopwatch, VerificationReport, guarded

logger = get_logger(__name__)

DEFAULT_WINDOW = 3
FULL_WINDOW_LIMIT = 600
MAX_ROUNDS = 50


class CyclotomicKind(str, Enum):
    HIGHER = "higher-level"
    CLASSICAL = "classical"


@dataclass
class WindowDimension:
    """Dimensão do quociente numa janela"""
    window: int
    window_dimension: int
    ideal_rank: int
    rounds: int

    @property
    def dimension(self) -> int:
        return self.window_dimension - self.ideal_rank


@dataclass
class CyclotomicQuotient:
    """Quociente estabilizado: chaves da janela, linhas reduzidas do ideal e a base do quociente"""
    kind: CyclotomicKind
    algebra: HeckeAlgebra
    corner: ColorSeq
    keys: list
    ideal_rows: list
    pivots: tuple
    current: WindowDimension
    previous: WindowDimension
    full: Optional[dict] = None
    Q: tuple = dc_field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return self.current.dimension

    @property
    def stabilized(self) -> bool:
        return self.current.dimension == self.previous.dimension

    @property
    def basis_keys(self) -> list:
        """Chaves fora dos pivôs: representantes de uma base do quociente"""
        pivots = set(self.pivots)
        return [k for i, k in enumerate(self.keys) if i not in pivots]

    def reduce(self, vector: dict) -> list[Scalar]:
        """
        Coordenadas de um vetor da janela na base do quociente

        Raises:
            NotInAlgebra: vetor com chaves fora da janela
        """
        field = self.algebra.field
        index = {k: i for i, k in enumerate(self.keys)}
        outside = [k for k in vector if k not in index]
        if outside:
            raise NotInAlgebra(f"Produto sai da janela B={self.current.window}: {len(outside)} termos")
        dense = [field.zero] * len(self.keys)
        for k, c in vector.items():
            dense[index[k]] = c
        for row, col in zip(self.ideal_rows, self.pivots):
            c = dense[col]
            if c:
                dense = [a - c * b for a, b in zip(dense, row)]
        pivots = set(self.pivots)
        return [dense[i] for i in range(len(self.keys)) if i not in pivots]

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "window": self.current.window,
            "dimension": self.dimension,
            "previous_dimension": self.previous.dimension,
            "stabilized": self.stabilized,
            "window_dimension": self.current.window_dimension,
            "ideal_rank": self.current.ideal_rank,
            "corner": self.corner.format(),
            "method": "windowed-ideal (heurístico, certificado por estabilização)",
        }
        if self.full is not None:
            out["full"] = self.full
        return out


# ============================================================================
# JANELAS
# ============================================================================

def box(d: int, window: int) -> list[tuple[int, ...]]:
    """[−B;B]^d, expoentes de menor |m| primeiro"""
    exps = list(product(range(-window, window + 1), repeat=d))
    return sorted(exps, key=lambda m: (max((abs(a) for a in m), default=0), m))


def valid_triples(algebra: HeckeAlgebra, pairs: Iterable[tuple[ColorSeq, ColorSeq]]) -> list[tuple]:
    """(b, c, w) cujo T_w^{b,c} existe"""
    triples = []
    perms = [Permutation(images) for images in permutations(range(algebra.d))]
    for b, c in pairs:
        for w in perms:
            try:
                algebra.canonical_Twbc(b, c, w)
            except IncompatibleSequences:
                continue
            triples.append((b, c, w))
    return triples


def window_keys(triples: Sequence[tuple], d: int, window: int) -> list[BasisKey]:
    """Chaves da janela com as de maior |m| primeiro (viram pivôs do ideal)"""
    keys = [(b, c, w, m) for (b, c, w) in triples for m in box(d, window)]
    return sorted(keys, key=lambda k: -max((abs(a) for a in k[3]), default=0))


def close_ideal(algebra: HeckeAlgebra, seeds: Sequence[SmashOperator], keys: Sequence[BasisKey],
                multipliers: Sequence[SmashOperator]) -> tuple[list, tuple, int]:
    """
    Fecho do span das sementes por multiplicação à esquerda e à direita, recortado à janela

    Args:
        algebra: Álgebra de Hecke das chaves
        seeds: Elementos do ideal
        keys: Chaves da janela (ordem das colunas)
        multipliers: Geradores usados dos dois lados

    Returns:
        (linhas reduzidas, colunas pivô, rodadas)
    """
    field = algebra.field
    index = {k: i for i, k in enumerate(keys)}

    def clip(op: SmashOperator) -> Optional[list]:
        decomposition = algebra.to_basis(op)
        if not decomposition or any(k not in index for k in decomposition):
            return None
        row = [field.zero] * len(keys)
        for k, c in decomposition.items():
            row[index[k]] = c
        return row

    rows = [row for row in (clip(s) for s in seeds) if row is not None]
    reduced, pivots = rref(rows, field) if rows else ([], ())
    reduced = reduced[:len(pivots)]
    rounds = 0
    while rounds < MAX_ROUNDS:
        rounds += 1
        candidates = list(reduced)
        for row in reduced:
            element = algebra.from_basis({keys[i]: c for i, c in enumerate(row) if c})
            for g in multipliers:
                for op in (g * element, element * g):
                    clipped = clip(op)
                    if clipped is not None:
                        candidates.append(clipped)
        new_rows, new_pivots = rref(candidates, field) if candidates else ([], ())
        new_rows = new_rows[:len(new_pivots)]
        if len(new_pivots) == len(pivots):
            return reduced, pivots, rounds
        reduced, pivots = new_rows, new_pivots
        logger.debug(f"   rodada {rounds}: posto {len(pivots)}")
    logger.warning(f"⚠️  Fecho do ideal não convergiu em {MAX_ROUNDS} rodadas")
    return reduced, pivots, rounds


# ============================================================================
# GERADORES DO IDEAL
# ============================================================================

def classical_algebra(config: ValidatedConfig) -> tuple[HeckeAlgebra, tuple]:
    """H_d(q) de nível zero e os parâmetros Q da configuração"""
    return HeckeAlgebra(config.with_level(0)), tuple(config.Q)


def classical_seeds(algebra: HeckeAlgebra, Q: Sequence[Scalar]) -> list[SmashOperator]:
    """∏_m (X₁ − Q_m)"""
    ring = algebra.ring
    P = ring.one
    for Qm in Q:
        P = P * (ring.gen(1) - Qm)
    return [algebra.poly(P)]


def killed_sequences(algebra: HeckeAlgebra) -> list[ColorSeq]:
    """c = (0, …): primeiro fio preto"""
    return [c for c in algebra.sequences if not c.is_red(0)]


def corner_seeds(algebra: HeckeAlgebra, corner: ColorSeq) -> list[SmashOperator]:
    """e(ω)·T_u^{ω,c}·T_v^{c,ω}·e(ω) para cada c morto"""
    seeds = []
    killed = killed_sequences(algebra)
    there = valid_triples(algebra, [(c, corner) for c in killed])
    back = valid_triples(algebra, [(corner, c) for c in killed])
    for (c1, _, u) in there:
        for (_, c2, v) in back:
            if c1 == c2:
                seeds.append(algebra.canonical_Twbc(corner, c1, v) * algebra.canonical_Twbc(c1, corner, u))
    return seeds


def corner_multipliers(algebra: HeckeAlgebra, corner: ColorSeq) -> list[SmashOperator]:
    """X_i^{±1} e T_r que preservam e(ω): só posições pretas"""
    out = []
    for i in range(algebra.level + 1, algebra.n + 1):
        out.append(algebra.X(i, corner))
        out.append(algebra.X(i, corner, inverse=True))
    for r in range(algebra.level + 1, algebra.n):
        out.append(algebra.T(r, corner))
    return out


def full_multipliers(algebra: HeckeAlgebra) -> list[SmashOperator]:
    out = [algebra.e(c) for c in algebra.sequences]
    for i in range(1, algebra.n + 1):
        out.append(algebra.X(i))
        out.append(algebra.X(i, inverse=True))
    out.extend(algebra.T(r) for r in range(1, algebra.n))
    return out


# ============================================================================
# OPERAÇÕES
# ============================================================================

def _window_dimension(algebra: HeckeAlgebra, triples: Sequence[tuple], seeds: Sequence[SmashOperator],
                      multipliers: Sequence[SmashOperator], window: int) -> tuple[WindowDimension, list, list, tuple]:
    keys = window_keys(triples, algebra.d, window)
    rows, pivots, rounds = close_ideal(algebra, seeds, keys, multipliers)
    return WindowDimension(window, len(keys), len(pivots), rounds), keys, rows, pivots


def cyclotomic_quotient(kind: CyclotomicKind, config: ValidatedConfig, window: int = DEFAULT_WINDOW,
                        full: bool = True) -> CyclotomicQuotient:
    """
    Quociente ciclotômico pelo método da janela

    Clássico: H_d(q)/(∏(X₁ − Q_m)). Nível ℓ: H_{d,Q}(q) módulo os e(c) com c₁ = 0;
    a dimensão principal é a do canto e(ω), e a do quociente inteiro vai em `full`.

    Args:
        kind: CyclotomicKind
        config: Configuração validada (d, ℓ, q, Q)
        window: B ≥ 1
        full: Também calcula o quociente inteiro de nível ℓ (se couber no limite)

    Raises:
        BadParameter: janela < 1 ou nível zero no caso de nível ℓ
    """
    if window < 1:
        raise BadParameter(f"Janela B = {window} deve ser ≥ 1")
    if kind == CyclotomicKind.CLASSICAL:
        algebra, Q = classical_algebra(config)
        if not Q:
            raise BadParameter("Quociente clássico exige ℓ ≥ 1 parâmetros Q")
        corner = ColorSeq.omega(0, algebra.d)
        seeds = classical_seeds(algebra, Q)
        multipliers = corner_multipliers(algebra, corner)
    else:
        algebra, Q = HeckeAlgebra(config), tuple(config.Q)
        if algebra.level == 0:
            raise BadParameter("Quociente de nível ℓ exige ℓ ≥ 1")
        corner = ColorSeq.omega(algebra.level, algebra.d)
        seeds = corner_seeds(algebra, corner)
        multipliers = corner_multipliers(algebra, corner)
    triples = valid_triples(algebra, [(corner, corner)])
    if window > 1:
        previous = _window_dimension(algebra, triples, seeds, multipliers, window - 1)[0]
    else:
        previous = WindowDimension(0, len(window_keys(triples, algebra.d, 0)), 0, 0)
    current, keys, rows, pivots = _window_dimension(algebra, triples, seeds, multipliers, window)
    quotient = CyclotomicQuotient(kind, algebra, corner, keys, rows, pivots, current, previous, Q=Q)
    if kind == CyclotomicKind.HIGHER and full:
        quotient.full = full_quotient(algebra, window)
    return quotient


def full_quotient(algebra: HeckeAlgebra, window: int) -> dict:
    """Quociente inteiro H^Q_{d,Q}(q) na janela; pulado acima de FULL_WINDOW_LIMIT chaves"""
    seqs = algebra.sequences
    triples = valid_triples(algebra, [(b, c) for b in seqs for c in seqs])
    size = len(triples) * (2 * window + 1) ** algebra.d
    if size > FULL_WINDOW_LIMIT:
        logger.warning(f"⚠️  Quociente inteiro pulado: {size} chaves > {FULL_WINDOW_LIMIT}")
        return {"skipped": True, "window_dimension": size}
    seeds = [algebra.e(c) for c in killed_sequences(algebra)]
    multipliers = full_multipliers(algebra)
    current = _window_dimension(algebra, triples, seeds, multipliers, window)[0]
    previous = current
    if window > 1:
        previous = _window_dimension(algebra, triples, seeds, multipliers, window - 1)[0]
    return {
        "skipped": False,
        "dimension": current.dimension,
        "previous_dimension": previous.dimension,
        "stabilized": current.dimension == previous.dimension,
    }


def cyclotomic_ideal_window(kind: CyclotomicKind, config: ValidatedConfig, window: int = DEFAULT_WINDOW,
                            full: bool = True) -> tuple[int, VerificationReport]:
    """
    Dimensão estabilizada do quociente ciclotômico e o relatório

    Returns:
        (dimensão, VerificationReport)

    Raises:
        WindowNotStabilized: dimensão em B difere da de B − 1
    """
    logger.info(f"🔍 Quociente ciclotômico {kind.value}: d={config.d}, ℓ={config.level}, B={window}")
    report = VerificationReport(suite=f"cyclotomic.{kind.value}", config=config.echo())
    with Stopwatch() as sw:
        quotient = cyclotomic_quotient(kind, config, window, full)
    report.wall_time = sw.elapsed
    report.results = quotient.to_dict()
    report.add(CheckResult(
        "window_stabilized", quotient.stabilized,
        {} if quotient.stabilized else {"window": window, "dimension": quotient.dimension,
                                         "previous": quotient.previous.dimension},
    ))
    if not quotient.stabilized:
        logger.error(
            f"❌ Dimensão mudou de {quotient.previous.dimension} para {quotient.dimension} em B={window}"
        )
        raise WindowNotStabilized(
            f"Dimensão ainda muda em B={window} ({quotient.previous.dimension} → {quotient.dimension}); aumente B"
        )
    logger.info(f"✅ dim = {quotient.dimension} (estável desde B={window - 1})")
    return quotient.dimension, report


# ============================================================================
# AUTOVALORES
# ============================================================================

def multiplication_matrix(quotient: CyclotomicQuotient, op: SmashOperator) -> list[list[Scalar]]:
    """Matriz da multiplicação à esquerda por op no quociente (colunas = base do quociente)"""
    algebra = quotient.algebra
    columns = []
    for key in quotient.basis_keys:
        image = algebra.to_basis(op * algebra.from_basis({key: algebra.field.one}))
        columns.append(quotient.reduce(image))
    n = len(columns)
    return [[columns[j][i] for j in range(n)] for i in range(n)]


def eigenvalues(rows: Sequence[Sequence[Scalar]], field: Any) -> tuple[list[Scalar], bool]:
    """
    Raízes do polinômio característico

    Returns:
        (raízes com multiplicidade, True se fatora em lineares sobre o corpo)
    """
    t = Symbol("t")
    coeffs = charpoly(rows, field)
    poly = Poly([field.domain.to_sympy(c) for c in coeffs], t, domain=field.domain)
    _, factors = poly.factor_list()
    roots, split = [], True
    for factor, mult in factors:
        if factor.degree() != 1:
            split = False
            continue
        _, c0 = factor.monic().all_coeffs()
        roots.extend([field(-c0)] * mult)
    return roots, split


def eigenvalue_check(config: ValidatedConfig, window: int = DEFAULT_WINDOW,
                     kind: CyclotomicKind = CyclotomicKind.CLASSICAL) -> VerificationReport:
    """
    Autovalores de cada x_t na representação regular do quociente estabilizado estão em ℱ

    Raises:
        WindowNotStabilized: quociente não estabilizou em B
    """
    quotient = cyclotomic_quotient(kind, config, window, full=False)
    if not quotient.stabilized:
        raise WindowNotStabilized(
            f"Dimensão ainda muda em B={window} ({quotient.previous.dimension} → {quotient.dimension}); aumente B"
        )
    algebra = quotient.algebra
    field = algebra.field
    quiver = build_quiver(config)
    report = VerificationReport(suite=f"cyclotomic.eigenvalues.{kind.value}", config=config.echo())
    found: dict = {}
    with Stopwatch() as sw:
        for t in range(1, algebra.d + 1):
            check_id = f"eigenvalues.x{t}"

            def _run(t=t, check_id=check_id) -> CheckResult:
                rows = multiplication_matrix(quotient, algebra.x(t, quotient.corner))
                roots, split = eigenvalues(rows, field)
                texts = sorted({field.format(r) for r in roots})
                found[f"x{t}"] = texts
                outside = sorted({field.format(r) for r in roots if not quiver.is_vertex(r)})
                ok = split and not outside
                witness = {} if ok else {"split": split, "outside": outside, "roots": texts}
                return CheckResult(check_id, ok, witness, {"roots": texts})

            report.add(guarded(check_id, _run))
    report.wall_time = sw.elapsed
    report.results = {"dimension": quotient.dimension, "eigenvalues": found, "quiver": quiver.describe()}
    status = "✅" if report.passed else "❌"
    logger.info(f"{status} Autovalores em ℱ: {found}")
    return report
