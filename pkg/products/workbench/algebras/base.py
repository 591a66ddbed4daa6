"""
Relações como dados e verificação sob uma interpretação
"""
from dataclasses import dataclass
from typing import Iterable, Optional

from products.workbench.expressions import ElementExpr, Interpretation, evaluate, to_text
from products.workbench.reports import CheckResult, compare_operators, guarded


@dataclass(frozen=True)
class Relation:
    """lhs = rhs, identificada por um id estável"""
    check_id: str
    lhs: ElementExpr
    rhs: ElementExpr

    def text(self) -> str:
        return f"{to_text(self.lhs)} = {to_text(self.rhs)}"


def check_relation(rel: Relation, interp: Interpretation) -> CheckResult:
    """Avalia os dois lados e compara como operadores"""
    def _run() -> CheckResult:
        lhs = evaluate(rel.lhs, interp)
        rhs = evaluate(rel.rhs, interp)
        return compare_operators(rel.check_id, lhs, rhs, {"relation": rel.text()})

    return guarded(rel.check_id, _run)


def check_relations(relations: Iterable[Relation], interp: Interpretation,
                    prefix: Optional[str] = None) -> list[CheckResult]:
    results = []
    for rel in relations:
        result = check_relation(rel, interp)
        if prefix:
            result.check_id = f"{prefix}.{result.check_id}"
        results.append(result)
    return results
