from __future__ import annotations

from typing import Protocol, Tuple, runtime_checkable

from ..models.solution import SolutionVector


@runtime_checkable
class Evaluator(Protocol):
    """Maps a solution to (kinf, ppf); deterministic for a fixed configuration."""

    # True when evaluate() has no side effects and may run in parallel threads.
    pure: bool

    def evaluate(self, sol: SolutionVector) -> Tuple[float, float]: ...
