from __future__ import annotations

import os
from typing import Iterable, List, Optional, Union

from ..errors import ReplayExhausted
from ..prompting.builder import MetaPrompt
from .base import GenerationOutput
from .records import read_records


class ReplayGenerator:
    """Returns stored responses in order, ignoring the prompt."""

    backend = "replay"

    def __init__(self, responses: Iterable[str]):
        self._responses: List[str] = list(responses)
        self._next = 0

    @classmethod
    def from_transcript(
        cls, path: Union[str, os.PathLike], trial: Optional[int] = None
    ) -> ReplayGenerator:
        records = read_records(path)
        if trial is not None:
            records = [r for r in records if r.trial == trial]
        return cls(r.response for r in records)

    @property
    def remaining(self) -> int:
        return len(self._responses) - self._next

    def generate(self, prompt: MetaPrompt) -> GenerationOutput:
        if self._next >= len(self._responses):
            raise ReplayExhausted(f"transcript exhausted after {len(self._responses)} responses")
        text = self._responses[self._next]
        self._next += 1
        return GenerationOutput(text=text)
