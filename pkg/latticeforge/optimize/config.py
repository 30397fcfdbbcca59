from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from ..errors import ConfigError
from ..models.solution import N_GENES

PERFECT_SCORE = 100.0
DEFAULT_TARGET_STOP = PERFECT_SCORE - 1e-9

INITIAL_RULES = ("random", "reference")

# Hand-tuned GE-14 designs that open a typical optimization session.
REFERENCE_DESIGNS: Tuple[str, ...] = (
    "1.4,2.2,2.6,4.2,5.0,4.7,3.7,4.1,8.0,4.9,7.0,5.0,6.0,5.0,8.0",
    "1.8,2.4,2.9,4.0,5.0,4.7,3.4,3.9,5.0,4.6,5.0,5.0,8.0,5.0,7.0",
    "1.8,2.5,2.7,4.2,5.0,4.9,3.7,3.8,8.0,4.7,5.0,5.0,8.0,4.8,9.0",
)


@dataclass(frozen=True)
class LoopConfig:
    """
    OPRO loop settings. `workers > 1` parallelizes a batch only for pure evaluators.

    `initial` picks how step 0 fills the archive: "random" draws uniform
    grid-valid solutions, "reference" starts from REFERENCE_DESIGNS and tops
    up with random ones when more than three are requested.
    """

    batch_size: int = 5
    max_steps: int = 60
    epsilon: float = 1e-6
    target_stop: float = DEFAULT_TARGET_STOP
    initial_solutions: int = 3
    initial: str = "random"
    plateau_stop: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ConfigError("batch_size must be at least 1")
        if self.max_steps < 1:
            raise ConfigError("max_steps must be at least 1")
        if self.initial_solutions < 1:
            raise ConfigError("initial_solutions must be at least 1")
        if self.initial not in INITIAL_RULES:
            raise ConfigError(f"initial must be one of {INITIAL_RULES}, got {self.initial!r}")
        if self.epsilon < 0:
            raise ConfigError("epsilon must be non-negative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")


@dataclass(frozen=True)
class GaConfig:
    population: int = 20
    generations: int = 50
    tournament_k: int = 3
    crossover_rate: float = 0.9
    mutation_rate: float = 1.0 / N_GENES
    elitism: int = 2
    target_stop: float = DEFAULT_TARGET_STOP
    workers: int = 1

    def __post_init__(self) -> None:
        if self.population < 2:
            raise ConfigError("population must be at least 2")
        if self.generations < 1:
            raise ConfigError("generations must be at least 1")
        if not 0 <= self.elitism < self.population:
            raise ConfigError("elitism must lie in [0, population)")
        if self.tournament_k < 1:
            raise ConfigError("tournament_k must be at least 1")
        for name in ("crossover_rate", "mutation_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1]")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")


@dataclass(frozen=True)
class RandomConfig:
    budget: int = 300

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ConfigError("budget must be at least 1")
