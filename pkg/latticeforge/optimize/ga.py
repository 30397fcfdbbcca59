# latticeforge/optimize/ga.py
from __future__ import annotations

import logging
from typing import List, Optional, Sequence

import numpy as np

from .._logging import resolve_logger
from ..errors import ConfigError
from ..evaluate.base import Evaluator
from ..lattice.grid import from_indices, random_indices, to_indices
from ..models.results import EvaluationResult, TrialReport
from ..models.solution import DEFAULT_GRID, N_GENES, ParameterGrid, SolutionVector
from ..scoring import DEFAULT_SCORING, ScoreConfig
from .config import GaConfig
from .trajectory import Trajectory, evaluate_batch


def _tournament(scores: np.ndarray, k: int, rng: np.random.Generator) -> int:
    entrants = rng.choice(len(scores), size=min(k, len(scores)), replace=False)
    return int(entrants[np.argmax(scores[entrants])])


def _reflect(genes: np.ndarray, lows: np.ndarray, highs: np.ndarray) -> np.ndarray:
    genes = np.where(genes > highs, 2 * highs - genes, genes)
    genes = np.where(genes < lows, 2 * lows - genes, genes)
    return np.clip(genes, lows, highs)


def run_ga(
    evaluator: Evaluator,
    scoring: ScoreConfig = DEFAULT_SCORING,
    ga: GaConfig = GaConfig(),
    seed: int = 0,
    *,
    grid: ParameterGrid = DEFAULT_GRID,
    initial_population: Optional[Sequence[SolutionVector]] = None,
    trial: int = 0,
    logger: Optional[logging.Logger] = None,
    log: bool = False,
) -> TrialReport:
    """
    Generational GA over integer grid indices.

    Tournament selection, uniform crossover producing one child per pair,
    per-gene +-1 step mutation reflected at the bounds, and `ga.elitism`
    survivors copied unchanged (and not re-evaluated). Step 0 is the initial
    population; each generation after it is one step.
    """
    log = resolve_logger(logger=logger, enabled=log, name=__name__, level=logging.DEBUG, trial=trial)
    rng = np.random.default_rng(seed)
    lows_l, highs_l, _ = grid.gene_bounds()
    lows, highs = np.array(lows_l), np.array(highs_l)

    if initial_population is None:
        population = random_indices(grid, rng, ga.population)
    else:
        if len(initial_population) != ga.population:
            raise ConfigError(f"initial population has {len(initial_population)} members, expected {ga.population}")
        population = np.stack([to_indices(s, grid) for s in initial_population])

    members = [from_indices(row, grid) for row in population]
    results: List[EvaluationResult] = evaluate_batch(evaluator, members, scoring, ga.workers)
    trajectory = Trajectory()
    trajectory.record(0, list(zip(members, results)))
    log.info(f"generation 0: best {trajectory.best_score:.4f}")

    for generation in range(1, ga.generations + 1):
        if trajectory.reached(ga.target_stop):
            break
        scores = np.array([r.score for r in results])
        order = np.argsort(-scores, kind="stable")
        elite = order[: ga.elitism]

        children = np.empty((ga.population - ga.elitism, N_GENES), dtype=population.dtype)
        for c in range(len(children)):
            first = population[_tournament(scores, ga.tournament_k, rng)]
            second = population[_tournament(scores, ga.tournament_k, rng)]
            if rng.random() < ga.crossover_rate:
                child = np.where(rng.random(N_GENES) < 0.5, first, second)
            else:
                child = first.copy()
            mutate = rng.random(N_GENES) < ga.mutation_rate
            steps = rng.choice(np.array([-1, 1]), size=N_GENES)
            children[c] = _reflect(child + mutate * steps, lows, highs)

        offspring = [from_indices(row, grid) for row in children]
        offspring_results = evaluate_batch(evaluator, offspring, scoring, ga.workers)

        population = np.concatenate([population[elite], children])
        results = [results[i] for i in elite] + offspring_results
        outcome = trajectory.record(generation, list(zip(offspring, offspring_results)))
        log.debug(f"generation {generation}: best {outcome.best_so_far:.4f}")

    return trajectory.to_report(trial=trial, seed=seed, engine="ga")

