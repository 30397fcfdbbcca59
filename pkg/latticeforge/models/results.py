# latticeforge/models/results.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .solution import SolutionVector


@dataclass(frozen=True)
class EvaluationResult:
    """Evaluator output (kinf, ppf) with the objective value it scores to."""

    kinf: float
    ppf: float
    score: float


@dataclass
class StepOutcome:
    """Everything one optimizer step produced."""

    step: int
    candidates: List[Tuple[SolutionVector, EvaluationResult]] = field(default_factory=list)
    best_so_far: float = float("-inf")
    rejects: int = 0

    @property
    def batch_best(self) -> Optional[float]:
        if not self.candidates:
            return None
        return max(res.score for _, res in self.candidates)


@dataclass
class TrialReport:
    """Per-trial outcome; aggregated into SummaryStats by the runner."""

    trial: int
    seed: int
    engine: str
    strategy: Optional[str] = None
    best_solution: Optional[str] = None
    best_score: float = float("-inf")
    best_kinf: Optional[float] = None
    best_ppf: Optional[float] = None
    steps_to_best: int = 0
    total_steps: int = 0
    total_evaluations: int = 0
    progression: List[float] = field(default_factory=list)
    evaluations_per_step: List[int] = field(default_factory=list)
    reject_counts: List[int] = field(default_factory=list)
    failed: bool = False
    error: Optional[str] = None
    # per-step detail of the run that produced this report; not serialized
    outcomes: List[StepOutcome] = field(default_factory=list, repr=False, compare=False)

    @property
    def label(self) -> Tuple[str, Optional[str]]:
        return self.engine, self.strategy

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trial": self.trial,
            "seed": self.seed,
            "engine": self.engine,
            "strategy": self.strategy,
            "best_solution": self.best_solution,
            "best_score": None if self.failed else self.best_score,
            "best_kinf": self.best_kinf,
            "best_ppf": self.best_ppf,
            "steps_to_best": self.steps_to_best,
            "total_steps": self.total_steps,
            "total_evaluations": self.total_evaluations,
            "progression": list(self.progression),
            "evaluations_per_step": list(self.evaluations_per_step),
            "reject_counts": list(self.reject_counts),
            "failed": self.failed,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> TrialReport:
        best = data.get("best_score")
        return cls(
            trial=int(data["trial"]),
            seed=int(data["seed"]),
            engine=str(data["engine"]),
            strategy=data.get("strategy"),
            best_solution=data.get("best_solution"),
            best_score=float("-inf") if best is None else float(best),
            best_kinf=data.get("best_kinf"),
            best_ppf=data.get("best_ppf"),
            steps_to_best=int(data.get("steps_to_best", 0)),
            total_steps=int(data.get("total_steps", 0)),
            total_evaluations=int(data.get("total_evaluations", 0)),
            progression=[float(v) for v in data.get("progression", [])],
            evaluations_per_step=[int(v) for v in data.get("evaluations_per_step", [])],
            reject_counts=[int(v) for v in data.get("reject_counts", [])],
            failed=bool(data.get("failed", False)),
            error=data.get("error"),
        )
