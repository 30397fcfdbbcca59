from __future__ import annotations

import threading
from typing import Dict, Tuple

from ..lattice.grid import serialize
from ..models.solution import SolutionVector
from .base import Evaluator


class CachedEvaluator:
    """Per-run memo keyed by the serialized solution; concurrent inserts of one key are idempotent."""

    def __init__(self, inner: Evaluator):
        self.inner = inner
        self.pure = getattr(inner, "pure", False)
        self._store: Dict[str, Tuple[float, float]] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def evaluate(self, sol: SolutionVector) -> Tuple[float, float]:
        key = serialize(sol)
        with self._lock:
            cached = self._store.get(key)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
        value = self.inner.evaluate(sol)
        with self._lock:
            return self._store.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._store)
