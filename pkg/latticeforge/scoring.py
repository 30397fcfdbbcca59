# latticeforge/scoring.py
"""
The lattice objective:

    score = base - w1 * |kinf - kinf_target| - w2 * max(0, ppf - ppf_target)

The default weights are the ones implied by the three published
solution-score pairs (see `derive_weights`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from .errors import DegenerateSystem, EvaluationError
from .models.results import EvaluationResult


@dataclass(frozen=True)
class ScoreConfig:
    kinf_target: float = 1.05
    ppf_target: float = 1.33
    w1: float = 2000.0
    w2: float = 1000.0
    base: float = 100.0

    def __post_init__(self) -> None:
        if not (self.w1 > 0 and self.w2 > 0):
            raise ValueError("weights w1 and w2 must be positive")
        if not self.ppf_target > 1:
            raise ValueError("ppf_target must exceed 1")
        if not 0 < self.kinf_target < 2:
            raise ValueError("kinf_target must lie in (0, 2)")


DEFAULT_SCORING = ScoreConfig()


def score(kinf: float, ppf: float, cfg: ScoreConfig = DEFAULT_SCORING) -> float:
    if not (math.isfinite(kinf) and math.isfinite(ppf)):
        raise EvaluationError(f"non-finite evaluator output (kinf={kinf}, ppf={ppf})")
    return (
        cfg.base
        - cfg.w1 * abs(kinf - cfg.kinf_target)
        - cfg.w2 * max(0.0, ppf - cfg.ppf_target)
    )


def score_result(kinf: float, ppf: float, cfg: ScoreConfig = DEFAULT_SCORING) -> EvaluationResult:
    return EvaluationResult(kinf=kinf, ppf=ppf, score=score(kinf, ppf, cfg))


def format_score(value: float) -> str:
    """Up to two decimals, trailing zeros dropped ("66.6", "44.08", "100")."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


@dataclass(frozen=True)
class WeightFit:
    w1: float
    w2: float
    max_residual: float


def derive_weights(
    pairs: Iterable[Tuple[float, float, float]],
    *,
    kinf_target: float = 1.05,
    ppf_target: float = 1.33,
    base: float = 100.0,
) -> WeightFit:
    """
    Least-squares (w1, w2) from (kinf, ppf, score) pairs with fixed targets and base.
    Raises DegenerateSystem when the penalty terms do not span both weights.
    """
    rows = [
        (abs(k - kinf_target), max(0.0, p - ppf_target), base - s) for k, p, s in pairs
    ]
    if len(rows) < 2:
        raise DegenerateSystem("at least two solution-score pairs are required")
    data = np.array(rows, dtype=float)
    a, b = data[:, :2], data[:, 2]
    if np.linalg.matrix_rank(a) < 2:
        raise DegenerateSystem("penalty terms are linearly dependent; weights are not identifiable")
    (w1, w2), *_ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.max(np.abs(a @ np.array([w1, w2]) - b)))
    return WeightFit(w1=float(w1), w2=float(w2), max_residual=residual)


def evaluate_and_score(evaluator, sol, cfg: ScoreConfig = DEFAULT_SCORING) -> EvaluationResult:
    """Evaluate `sol` with any object exposing `evaluate(sol) -> (kinf, ppf)` and score it."""
    kinf, ppf = evaluator.evaluate(sol)
    return score_result(kinf, ppf, cfg)
