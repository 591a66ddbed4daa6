"""
CLI do workbench - verificações, forma normal e ação de elementos

stdout recebe só JSON; logs e tabelas de resumo vão para stderr.

Códigos de saída:
    0  todas as verificações passaram
    1  alguma verificação falhou
    2  erro de entrada (objeto JSON de erro em stdout)
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from shared.algebra.errors import ExpressionIndexError, ExpressionSyntaxError, WorkbenchError
from shared.algebra.scalars import ValidatedConfig, validate_config
from shared.algebra.smash import block_key
from shared.handlers.config import WorkbenchSettings, load_settings
from shared.handlers.logging_config import get_logger, setup_logging
from shared.handlers.manifest import RunLedger
from products.workbench.algebras.cyclotomic import CyclotomicKind, cyclotomic_ideal_window
from products.workbench.algebras.hecke import HeckeAlgebra
from products.workbench.algebras.klr import KLRAlgebra
from products.workbench.algebras.schur import SchurEngine
from products.workbench.expressions import generators_in, parse, to_text
from products.workbench.pipelines.verify_suites import SUITE_NAMES, SuiteOptions, run_suites
from products.workbench.reports import VerificationReport

logger = get_logger(__name__)

KLR_GENERATORS = {"psi", "y"}
SCHUR_GENERATORS = {"split", "merge", "lcross", "rcross"}


# ============================================================================
# ARGUMENTOS
# ============================================================================

def _common_flags() -> argparse.ArgumentParser:
    """Flags compartilhadas; default None para respeitar TOML e ambiente"""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("configuração")
    group.add_argument("--config", type=Path, default=None, help="Arquivo TOML (padrão: config/workbench.toml)")
    group.add_argument("--char", type=int, default=None, help="Característica: 0 ou primo p")
    group.add_argument("--q", default=None, help="Parâmetro q (≠ 0, 1)")
    group.add_argument("--Q", default=None, help="Parâmetros Q separados por vírgula, ex.: 3,5")
    group.add_argument("--d", type=int, default=None, help="Posto d")
    group.add_argument("--level", type=int, default=None, help="Nível ℓ (padrão: len(Q))")
    group.add_argument("--order", type=int, default=None, help="Ordem N dos jatos")
    group.add_argument("--point", default=None, help="Ponto a / rótulos ν, ex.: 1,2")
    group.add_argument("--seed", type=int, default=None, help="Semente das palavras aleatórias")
    group.add_argument("--window", type=int, default=None, help="Janela B do quociente ciclotômico")
    run = parent.add_argument_group("execução")
    run.add_argument("--workers", type=int, default=None, help="Workers Prefect (1 = no processo)")
    run.add_argument("--ledger", default=None, help="Ledger JSON de execuções")
    run.add_argument("--no-timing", action="store_true", help="Omite wall time do JSON")
    run.add_argument("--log-level", default="INFO", help="DEBUG, INFO, WARNING, ERROR")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Workbench exato para álgebras de Hecke afins de nível ℓ e suas companheiras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Executa suítes de verificação")
    verify.add_argument("suite", choices=list(SUITE_NAMES) + ["all"])
    verify.add_argument("--side", default="hecke-klr", help="iso: hecke-klr, schur-qschur ou uma direção")
    verify.add_argument("--words", type=int, default=5, help="iso: palavras para a multiplicatividade")

    normal = sub.add_parser("normal-form", parents=[common], help="Decomposição na base T_w x^m")
    normal.add_argument("expr")

    act = sub.add_parser("act", parents=[common], help="Aplica um elemento a um polinômio")
    act.add_argument("expr")
    act.add_argument("on", choices=["on"])
    act.add_argument("poly")

    dim = sub.add_parser("dim", parents=[common], help="Dimensões")
    dim.add_argument("what", choices=["cyclotomic"])
    dim.add_argument("--kind", choices=[k.value for k in CyclotomicKind], default=CyclotomicKind.CLASSICAL.value)
    return parser


def resolve(args: argparse.Namespace) -> tuple[WorkbenchSettings, ValidatedConfig]:
    cli = {
        "char": args.char, "q": args.q, "Q": args.Q, "d": args.d, "level": args.level,
        "order": args.order, "point": args.point, "seed": args.seed, "window": args.window,
        "workers": args.workers, "ledger": args.ledger,
    }
    settings = load_settings(args.config, cli)
    return settings, validate_config(settings.field_config())


# ============================================================================
# COMANDOS
# ============================================================================

def _emit(payload: Any) -> None:
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2))


def _point(settings: WorkbenchSettings, config: ValidatedConfig) -> Optional[tuple]:
    if settings.point is None:
        return None
    return tuple(config.field(p) for p in settings.point)


def cmd_verify(args: argparse.Namespace, settings: WorkbenchSettings, config: ValidatedConfig) -> int:
    options = SuiteOptions(
        point=_point(settings, config), order=settings.order, seed=settings.seed,
        words=args.words, window=settings.window, side=args.side,
    )
    report = run_suites(args.suite, config, options, workers=settings.workers)
    return _finish(report, settings, args.no_timing)


def _finish(report: VerificationReport, settings: WorkbenchSettings, no_timing: bool) -> int:
    print(report.to_json(include_timing=not no_timing))
    report.print_summary()
    if settings.ledger:
        RunLedger(Path(settings.ledger)).add_entry(report.to_dict())
    return 0 if report.passed else 1


def cmd_normal_form(args: argparse.Namespace, settings: WorkbenchSettings, config: ValidatedConfig) -> int:
    algebra = HeckeAlgebra(config)
    expr = parse(args.expr)
    decomposition = algebra.to_basis(algebra.evaluate(expr))
    _emit({"expr": to_text(expr), "basis": algebra.basis_to_json(decomposition)})
    return 0


def engine_for(expr: Any, config: ValidatedConfig, point: Optional[tuple]) -> Any:
    """Álgebra que interpreta os geradores da expressão"""
    names = {g.name for g in generators_in(expr)}
    if names & KLR_GENERATORS:
        return KLRAlgebra(config, point)
    if names & SCHUR_GENERATORS:
        return SchurEngine(config)
    return HeckeAlgebra(config)


def cmd_act(args: argparse.Namespace, settings: WorkbenchSettings, config: ValidatedConfig) -> int:
    expr = parse(args.expr)
    engine = engine_for(expr, config, _point(settings, config))
    f = engine.ring.parse(args.poly)
    op = engine.evaluate(expr)
    one = engine.one()
    images = op.act({block: f for block in one.sources()})
    result = {}
    for block, value in images.items():
        result[block_key(block)] = value.to_laurent().format() if value.is_laurent() else value.format()
    payload: dict = {"expr": to_text(expr), "input": f.format(), "result": dict(sorted(result.items()))}
    if len(one.sources()) == 1:
        payload["value"] = next(iter(result.values()), "0")
    _emit(payload)
    return 0


def cmd_dim(args: argparse.Namespace, settings: WorkbenchSettings, config: ValidatedConfig) -> int:
    dimension, report = cyclotomic_ideal_window(CyclotomicKind(args.kind), config, settings.window)
    payload = report.to_dict(include_timing=not args.no_timing)
    payload["dimension"] = dimension
    _emit(payload)
    report.print_summary()
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "normal-form": cmd_normal_form,
    "act": cmd_act,
    "dim": cmd_dim,
}


def error_payload(exc: WorkbenchError) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, (ExpressionSyntaxError, ExpressionIndexError)):
        payload["position"] = exc.position
    return payload


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings, config = resolve(args)
        setup_logging(enable_prefect=settings.workers > 1, level=args.log_level)
        return COMMANDS[args.command](args, settings, config)
    except WorkbenchError as exc:
        logger.error(f"❌ {type(exc).__name__}: {exc}")
        _emit(error_payload(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
