from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from .._logging import resolve_logger
from ..evaluate.base import Evaluator
from ..lattice.grid import random_solution
from ..models.results import TrialReport
from ..models.solution import DEFAULT_GRID, ParameterGrid
from ..scoring import DEFAULT_SCORING, ScoreConfig, evaluate_and_score
from .config import DEFAULT_TARGET_STOP
from .trajectory import Trajectory


def run_random_baseline(
    evaluator: Evaluator,
    scoring: ScoreConfig = DEFAULT_SCORING,
    budget: int = 300,
    seed: int = 0,
    *,
    grid: ParameterGrid = DEFAULT_GRID,
    target_stop: float = DEFAULT_TARGET_STOP,
    trial: int = 0,
    logger: Optional[logging.Logger] = None,
    log: bool = False,
) -> TrialReport:
    """Uniform random search, one evaluation per step; step 0 is the first sample."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    log = resolve_logger(logger=logger, enabled=log, name=__name__, level=logging.DEBUG, trial=trial)
    rng = np.random.default_rng(seed)
    trajectory = Trajectory()
    for step in range(budget):
        sol = random_solution(grid, rng)
        trajectory.record(step, [(sol, evaluate_and_score(evaluator, sol, scoring))])
        if trajectory.reached(target_stop):
            break
    log.info(f"random search: best {trajectory.best_score:.4f} after {trajectory.evaluations} samples")
    return trajectory.to_report(trial=trial, seed=seed, engine="random")
