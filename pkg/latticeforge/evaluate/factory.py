from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import List, Optional

from ..lattice.geometry import LatticeMap
from .base import Evaluator
from .cache import CachedEvaluator
from .external import ExternalEvaluator
from .surrogate import SurrogateConfig, SurrogateEvaluator

EVALUATOR_KINDS = ("surrogate", "external")


@dataclass(frozen=True)
class EvaluatorConfig:
    kind: str = "surrogate"
    surrogate: SurrogateConfig = field(default_factory=SurrogateConfig)
    command: List[str] = field(default_factory=list)
    timeout: float = 60.0
    max_concurrency: int = 1
    cache: bool = True

    def __post_init__(self) -> None:
        if self.kind not in EVALUATOR_KINDS:
            raise ValueError(f"evaluator kind must be one of {EVALUATOR_KINDS}, got {self.kind!r}")
        if self.kind == "external" and not self.command:
            raise ValueError("external evaluator requires a command")
        if self.timeout <= 0:
            raise ValueError("evaluator timeout must be positive")


def build_evaluator(
    cfg: EvaluatorConfig,
    lattice: Optional[LatticeMap] = None,
    *,
    limiter: Optional[threading.BoundedSemaphore] = None,
) -> Evaluator:
    """
    Fresh evaluator for one run; the cache, when enabled, is not shared across runs.

    `limiter` is the process slot pool an external evaluator draws from. Build it once
    with `concurrency_limiter` and hand it to every evaluator of a run.
    """
    inner: Evaluator
    if cfg.kind == "external":
        inner = ExternalEvaluator(cfg.command, cfg.timeout, cfg.max_concurrency, limiter=limiter)
    else:
        inner = SurrogateEvaluator(lattice, cfg.surrogate)
    return CachedEvaluator(inner) if cfg.cache else inner


def concurrency_limiter(cfg: EvaluatorConfig) -> Optional[threading.BoundedSemaphore]:
    """One slot pool for a whole run; None for in-process evaluators."""
    if cfg.kind != "external":
        return None
    return threading.BoundedSemaphore(cfg.max_concurrency)
