"""
Álgebra linear densa exata sobre o corpo de coeficientes (DomainMatrix do sympy)
"""
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from shared.algebra.scalars import Field, Scalar


def as_matrix(rows: Sequence[Sequence[Scalar]], field: Field, ncols: int = 0) -> DomainMatrix:
    """Matriz densa com entradas já no corpo"""
    ncols = len(rows[0]) if rows else ncols
    data = [[field(v) for v in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), field.domain)


def rank(rows: Sequence[Sequence[Scalar]], field: Field) -> int:
    if not rows or not rows[0]:
        return 0
    return as_matrix(rows, field).rank()


def rref(rows: Sequence[Sequence[Scalar]], field: Field) -> tuple[list[list[Scalar]], tuple[int, ...]]:
    """Forma escalonada reduzida e colunas pivô"""
    if not rows:
        return [], ()
    reduced, pivots = as_matrix(rows, field).rref()
    return [list(row) for row in reduced.to_list()], tuple(pivots)


def charpoly(rows: Sequence[Sequence[Scalar]], field: Field) -> list[Scalar]:
    """Coeficientes de det(t·I − A), do grau mais alto ao termo constante"""
    if not rows:
        return [field.one]
    return [field(c) for c in as_matrix(rows, field).charpoly()]


def vectors_to_rows(vectors: Sequence[dict], field: Field) -> tuple[list[list[Scalar]], list]:
    """
    Vetores esparsos {chave: coeficiente} como linhas densas sobre a união das chaves

    Returns:
        (linhas, chaves ordenadas)
    """
    keys = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [field.zero] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return rows, keys
