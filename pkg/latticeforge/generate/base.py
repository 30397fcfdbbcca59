from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

from ..prompting.builder import MetaPrompt


@dataclass(frozen=True)
class GenerationOutput:
    text: str
    latency: float = 0.0
    prompt_tokens: Optional[int] = None
    completion_tokens: Optional[int] = None


class CandidateGenerator(Protocol):
    backend: str

    def generate(self, prompt: MetaPrompt) -> GenerationOutput: ...
