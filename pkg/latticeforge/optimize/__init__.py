from .config import (
    DEFAULT_TARGET_STOP,
    INITIAL_RULES,
    PERFECT_SCORE,
    REFERENCE_DESIGNS,
    GaConfig,
    LoopConfig,
    RandomConfig,
)
from .ga import run_ga
from .opro import run_opro, seed_archive, trial_streams
from .random_search import run_random_baseline
from .trajectory import Trajectory, evaluate_batch

__all__ = [
    "DEFAULT_TARGET_STOP",
    "INITIAL_RULES",
    "PERFECT_SCORE",
    "REFERENCE_DESIGNS",
    "GaConfig",
    "LoopConfig",
    "RandomConfig",
    "Trajectory",
    "evaluate_batch",
    "run_ga",
    "run_opro",
    "run_random_baseline",
    "seed_archive",
    "trial_streams",
]
