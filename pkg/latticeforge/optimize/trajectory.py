# latticeforge/optimize/trajectory.py
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ..evaluate.base import Evaluator
from ..lattice.grid import serialize
from ..models.results import EvaluationResult, StepOutcome, TrialReport
from ..models.solution import SolutionVector
from ..scoring import ScoreConfig, evaluate_and_score


def evaluate_batch(
    evaluator: Evaluator,
    sols: Sequence[SolutionVector],
    scoring: ScoreConfig,
    workers: int = 1,
) -> List[EvaluationResult]:
    """Results in candidate order; threads are used only for pure evaluators."""
    if workers > 1 and len(sols) > 1 and getattr(evaluator, "pure", False):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda s: evaluate_and_score(evaluator, s, scoring), sols))
    return [evaluate_and_score(evaluator, s, scoring) for s in sols]


class Trajectory:
    """Best-so-far bookkeeping shared by all engines."""

    def __init__(self) -> None:
        self.outcomes: List[StepOutcome] = []
        self.best: Optional[Tuple[SolutionVector, EvaluationResult]] = None
        self.best_step = 0
        self.evaluations = 0

    @property
    def best_score(self) -> float:
        return self.best[1].score if self.best else float("-inf")

    def reached(self, target: float) -> bool:
        return self.best_score >= target

    def record(
        self,
        step: int,
        candidates: Sequence[Tuple[SolutionVector, EvaluationResult]],
        rejects: int = 0,
    ) -> StepOutcome:
        for sol, res in candidates:
            # strict comparison keeps the first step that attained the final best
            if res.score > self.best_score:
                self.best = (sol, res)
                self.best_step = step
        self.evaluations += len(candidates)
        outcome = StepOutcome(
            step=step,
            candidates=list(candidates),
            best_so_far=self.best_score,
            rejects=rejects,
        )
        self.outcomes.append(outcome)
        return outcome

    def to_report(self, *, trial: int, seed: int, engine: str, strategy: Optional[str] = None) -> TrialReport:
        best_sol, best_res = self.best if self.best else (None, None)
        return TrialReport(
            trial=trial,
            seed=seed,
            engine=engine,
            strategy=strategy,
            best_solution=serialize(best_sol) if best_sol is not None else None,
            best_score=self.best_score,
            best_kinf=best_res.kinf if best_res else None,
            best_ppf=best_res.ppf if best_res else None,
            steps_to_best=self.best_step,
            total_steps=self.outcomes[-1].step if self.outcomes else 0,
            total_evaluations=self.evaluations,
            progression=[o.best_so_far for o in self.outcomes],
            evaluations_per_step=[len(o.candidates) for o in self.outcomes],
            reject_counts=[o.rejects for o in self.outcomes],
            outcomes=list(self.outcomes),
        )
