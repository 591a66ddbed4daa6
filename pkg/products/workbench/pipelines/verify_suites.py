"""
Pipelines de verificação - suítes independentes distribuídas em tasks Prefect

Cada suíte vira uma lista de jobs (rótulo, função que devolve um
VerificationReport). Com workers = 1 os jobs rodam no processo; com mais
workers um flow Prefect submete cada job a um ConcurrentTaskRunner. O
relatório final é a fusão ordenada por id, igual nos dois caminhos.
"""
from dataclasses import dataclass
from typing import Callable, Optional

from prefect import flow, task, get_run_logger
from prefect.cache_policies import NONE
from prefect.task_runners import ConcurrentTaskRunner

from shared.algebra.errors import BadParameter
from shared.algebra.scalars import ValidatedConfig
from shared.handlers.logging_config import get_logger
from products.workbench.algebras import cyclotomic, hecke, isocheck, klr, quiver_schur, schur
from products.workbench.reports import VerificationReport, merge_reports

logger = get_logger(__name__)

Job = tuple[str, Callable[[], VerificationReport]]

SUITE_NAMES = ("hecke", "klr", "schur", "qschur", "iso", "cyclotomic")


@dataclass(frozen=True)
class SuiteOptions:
    """Parâmetros das suítes além da configuração do corpo"""
    point: Optional[tuple] = None
    order: int = 2
    seed: int = 0
    words: int = 5
    window: int = cyclotomic.DEFAULT_WINDOW
    side: str = "hecke-klr"


def get_task_logger():
    """Helper para obter logger do Prefect com fallback"""
    try:
        return get_run_logger()
    except Exception:
        return logger


# ============================================================================
# JOBS POR SUÍTE
# ============================================================================

def hecke_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    jobs: list[Job] = [
        ("hecke.presentation", lambda: hecke.verify_presentation(config)),
        ("hecke.center", lambda: hecke.center_check(config)),
        ("hecke.sharp", lambda: hecke.sharp_check(config)),
        ("hecke.laurent", lambda: hecke.laurent_check(config, seed=options.seed)),
        ("hecke.basis", lambda: hecke.basis_roundtrip_check(config, seed=options.seed)),
    ]
    if config.level > 0:
        jobs.append(("hecke.embedding", lambda: hecke.embedding_check(config)))
    return jobs


def klr_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    jobs: list[Job] = [
        ("klr.relations", lambda: klr.verify_klr_relations(config, options.point)),
        ("klr.structure", lambda: klr.structure_check(config, options.point, seed=options.seed)),
    ]
    if config.Q:
        jobs.append(("klr.reduction", lambda: klr.reduction_check(config, options.point)))
    return jobs


def schur_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    jobs: list[Job] = [
        ("schur.phi", lambda: schur.phi_check(config)),
        ("schur.intertwining", lambda: schur.intertwining_check(config)),
        ("schur.invariance", lambda: schur.invariance_check(config)),
        ("schur.hom_basis", lambda: schur.hom_basis_check(config)),
    ]
    if config.d <= 3:
        level_zero = config.with_level(0)
        jobs.insert(0, ("schur.identities", lambda: schur.verify_schur_identities(level_zero)))
    return jobs


def qschur_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    return [("qschur.generators", lambda: quiver_schur.verify_quiver_schur(config, options.point))]


def iso_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    return [
        (f"iso.{direction.value}", lambda direction=direction: isocheck.verify_iso(
            direction, config, options.point, options.order, options.seed, options.words,
        ))
        for direction in isocheck.parse_direction(options.side)
    ]


def cyclotomic_jobs(config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    kinds = [cyclotomic.CyclotomicKind.CLASSICAL]
    if config.level > 0:
        kinds.append(cyclotomic.CyclotomicKind.HIGHER)
    jobs: list[Job] = [
        (f"cyclotomic.{kind.value}", lambda kind=kind: cyclotomic.cyclotomic_ideal_window(
            kind, config, options.window,
        )[1])
        for kind in kinds
    ]
    jobs.append(("cyclotomic.eigenvalues", lambda: cyclotomic.eigenvalue_check(config, options.window)))
    return jobs


JOB_BUILDERS = {
    "hecke": hecke_jobs,
    "klr": klr_jobs,
    "schur": schur_jobs,
    "qschur": qschur_jobs,
    "iso": iso_jobs,
    "cyclotomic": cyclotomic_jobs,
}


def suite_jobs(suite: str, config: ValidatedConfig, options: SuiteOptions) -> list[Job]:
    """
    Raises:
        BadParameter: suíte desconhecida
    """
    if suite == "all":
        return [job for name in SUITE_NAMES for job in JOB_BUILDERS[name](config, options)]
    if suite not in JOB_BUILDERS:
        raise BadParameter(f"Suíte desconhecida {suite!r}; use uma de {list(SUITE_NAMES) + ['all']}")
    return JOB_BUILDERS[suite](config, options)


# ============================================================================
# TASKS E FLOW
# ============================================================================

@task(name="Executar suíte", retries=0, cache_policy=NONE)
def run_job_task(label: str, job: Callable[[], VerificationReport]) -> VerificationReport:
    get_task_logger().info(f"Suíte: {label}")
    return job()


@flow(
    name="Verificação do workbench",
    description="Executa suítes de verificação independentes em paralelo",
    task_runner=ConcurrentTaskRunner(),
)
def verify_flow(jobs: list[Job]) -> list[VerificationReport]:
    futures = [run_job_task.submit(label, job) for label, job in jobs]
    return [f.result() for f in futures]


def _combine(suite: str, config: ValidatedConfig, reports: list[VerificationReport]) -> VerificationReport:
    if len(reports) == 1:
        return reports[0]
    return merge_reports(suite, config.echo(), reports)


def run_suites(suite: str, config: ValidatedConfig, options: SuiteOptions = SuiteOptions(),
               workers: int = 1) -> VerificationReport:
    """
    Executa uma suíte (ou `all`) e devolve o relatório fundido

    Args:
        suite: hecke, klr, schur, qschur, iso, cyclotomic ou all
        config: Configuração validada
        options: SuiteOptions
        workers: 1 = no processo; > 1 = flow Prefect concorrente

    Returns:
        VerificationReport determinístico (ordenado por id)
    """
    jobs = suite_jobs(suite, config, options)
    logger.info("=" * 80)
    logger.info(f"VERIFICAÇÃO {suite.upper()} - {len(jobs)} suíte(s), workers={workers}")
    logger.info("=" * 80)
    if workers <= 1:
        reports = [job() for _, job in jobs]
    else:
        reports = verify_flow(jobs)
    report = _combine(suite, config, reports)
    status = "✅" if report.passed else "❌"
    logger.info(f"{status} RESUMO {suite}: {len(report.checks) - len(report.failures)}/{len(report.checks)}")
    return report
