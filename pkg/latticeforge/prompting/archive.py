# latticeforge/prompting/archive.py
from __future__ import annotations

import bisect
from typing import Iterator, List, Optional, Set, Tuple

from ..lattice.grid import serialize
from ..models.results import EvaluationResult
from ..models.solution import SolutionVector

Entry = Tuple[SolutionVector, EvaluationResult]

DEFAULT_CAPACITY = 20


class SolutionArchive:
    """
    Bounded history of evaluated solutions, ascending by score (best last).

    Serialized solutions are unique; when full, the lowest score is evicted.
    Equal scores keep insertion order, so the oldest of a tie is evicted first.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise ValueError("archive capacity must be at least 1")
        self.capacity = capacity
        self._entries: List[Entry] = []
        self._scores: List[float] = []
        self._keys: Set[str] = set()

    def insert(self, sol: SolutionVector, result: EvaluationResult) -> bool:
        """Insert in sorted position; returns False for a duplicate or an immediately evicted entry."""
        key = serialize(sol)
        if key in self._keys:
            return False
        pos = bisect.bisect_right(self._scores, result.score)
        self._scores.insert(pos, result.score)
        self._entries.insert(pos, (sol, result))
        self._keys.add(key)
        if len(self._entries) > self.capacity:
            evicted, _ = self._entries.pop(0)
            self._scores.pop(0)
            self._keys.discard(serialize(evicted))
            return pos > 0
        return True

    def __contains__(self, sol: object) -> bool:
        return isinstance(sol, SolutionVector) and serialize(sol) in self._keys

    @property
    def entries(self) -> Tuple[Entry, ...]:
        return tuple(self._entries)

    @property
    def best(self) -> Optional[Entry]:
        return self._entries[-1] if self._entries else None

    def scores(self) -> List[float]:
        return list(self._scores)

    def snapshot(self) -> SolutionArchive:
        copy = SolutionArchive(self.capacity)
        copy._entries = list(self._entries)
        copy._scores = list(self._scores)
        copy._keys = set(self._keys)
        return copy

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(list(self._entries))


def archive_insert(
    archive: SolutionArchive, sol: SolutionVector, result: EvaluationResult
) -> SolutionArchive:
    archive.insert(sol, result)
    return archive
