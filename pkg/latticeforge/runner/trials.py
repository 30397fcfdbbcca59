# latticeforge/runner/trials.py
from __future__ import annotations

import json
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from .._logging import resolve_logger
from ..config import RunConfig
from ..errors import EvaluationError, GenerationFailed
from ..evaluate.factory import build_evaluator, concurrency_limiter
from ..generate.records import RunLog
from ..lattice.geometry import LatticeMap
from ..models.results import TrialReport
from ..optimize.ga import run_ga
from ..optimize.opro import run_opro
from ..optimize.random_search import run_random_baseline
from .reports import SummaryStats, load_reports, save_report, write_reports

_log = logging.getLogger(__name__)


@dataclass
class TrialsResult:
    run_dir: Path
    reports: List[TrialReport]
    stats: List[SummaryStats]


def run_dir_for(cfg: RunConfig) -> Path:
    """Timestamp-free directory named by engine, strategy and config digest."""
    return Path(cfg.output_dir) / f"{cfg.label}-{cfg.digest()}"


def run_single(
    cfg: RunConfig,
    trial: int,
    *,
    lattice: Optional[LatticeMap] = None,
    run_log: Optional[RunLog] = None,
    logger: Optional[logging.Logger] = None,
    log: bool = False,
    limiter: Optional[threading.BoundedSemaphore] = None,
) -> TrialReport:
    """One trial of `cfg.engine` with seed `base_seed + trial` and a fresh evaluator cache."""
    seed = cfg.base_seed + trial
    lattice = lattice or cfg.problem.load_map()
    evaluator = build_evaluator(cfg.evaluator, lattice, limiter=limiter)
    grid = cfg.problem.grid
    if cfg.engine == "opro":
        return run_opro(
            cfg.strategy,
            cfg.generator,
            evaluator,
            cfg.scoring,
            cfg.loop,
            seed,
            grid=grid,
            lattice=lattice,
            parse_mode=cfg.parse_mode,
            archive_capacity=cfg.archive_capacity,
            run_log=run_log,
            trial=trial,
            logger=logger,
            log=log,
        )
    if cfg.engine == "ga":
        return run_ga(evaluator, cfg.scoring, cfg.ga, seed, grid=grid, trial=trial, logger=logger, log=log)
    return run_random_baseline(
        evaluator,
        cfg.scoring,
        cfg.random.budget,
        seed,
        grid=grid,
        target_stop=cfg.loop.target_stop,
        trial=trial,
        logger=logger,
        log=log,
    )


def run_trials(
    cfg: RunConfig,
    *,
    logger: Optional[logging.Logger] = None,
    log: bool = False,
) -> TrialsResult:
    """
    Run `cfg.trials` trials (up to `cfg.jobs` at once) and write the run directory:

        config.json, runlog.jsonl, trials/trial-NNN.json,
        summary.md, summary.json, progression.csv, progression.svg

    A trial whose generator or evaluator fails is stored with `failed: true`
    and left out of the statistics.
    """
    engine_log = resolve_logger(logger=logger, enabled=log, name=__name__)
    run_dir = run_dir_for(cfg)
    trials_dir = run_dir / "trials"
    trials_dir.mkdir(parents=True, exist_ok=True)
    for stale in trials_dir.glob("trial-*.json"):
        stale.unlink()
    (run_dir / "config.json").write_text(json.dumps(cfg.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")

    lattice = cfg.problem.load_map()
    # external processes are capped per run, not per trial
    limiter = concurrency_limiter(cfg.evaluator)

    def one(trial: int) -> TrialReport:
        try:
            report = run_single(
                cfg, trial, lattice=lattice, run_log=run_log, logger=logger, log=log, limiter=limiter
            )
        except (GenerationFailed, EvaluationError) as e:
            _log.warning("trial %d failed: %s", trial, e)
            report = TrialReport(
                trial=trial,
                seed=cfg.base_seed + trial,
                engine=cfg.engine,
                strategy=cfg.strategy.value if cfg.engine == "opro" else None,
                failed=True,
                error=f"{type(e).__name__}: {e}",
            )
        save_report(run_dir, report)
        engine_log.info(f"trial {trial}: best {report.best_score:.4f} at step {report.steps_to_best}")
        return report

    with RunLog(run_dir / "runlog.jsonl") as run_log:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            list(pool.map(one, range(cfg.trials)))

    reports = load_reports(run_dir)
    stats = write_reports(run_dir, reports)
    return TrialsResult(run_dir=run_dir, reports=reports, stats=stats)
