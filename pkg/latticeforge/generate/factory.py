from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from ..errors import ConfigError
from ..models.solution import DEFAULT_GRID, ParameterGrid
from ..prompting.builder import MetaPrompt
from .base import CandidateGenerator
from .http import ChatCompletionGenerator
from .mock import MockMutatorGenerator
from .replay import ReplayGenerator


class Backend(str, Enum):
    HTTP = "http"
    MOCK = "mock"
    REPLAY = "replay"

    @classmethod
    def parse(cls, value: Union[str, Backend]) -> Backend:
        if isinstance(value, Backend):
            return value
        key = str(value).strip().lower().replace("-", "").replace("_", "")
        aliases = {"http": cls.HTTP, "mock": cls.MOCK, "mockmutator": cls.MOCK, "replay": cls.REPLAY}
        if key not in aliases:
            raise ConfigError(f"unknown generator backend: {value!r}")
        return aliases[key]


@dataclass(frozen=True)
class GeneratorConfig:
    backend: Backend = Backend.MOCK
    endpoint: Optional[str] = None
    model: Optional[str] = None
    api_key_env: Optional[str] = "LATTICEFORGE_API_KEY"
    temperature: float = 1.0
    max_tokens: int = 2048
    timeout: float = 120.0
    max_retries: int = 3
    backoff_base: float = 1.0
    transcript: Optional[str] = None
    replay_trial: Optional[int] = None
    mutation_rate: float = 0.3

    def __post_init__(self) -> None:
        object.__setattr__(self, "backend", Backend.parse(self.backend))
        if self.backend is Backend.HTTP and not (self.endpoint and self.model and self.api_key_env):
            raise ConfigError("http backend requires endpoint, model and api_key_env")
        if self.backend is Backend.REPLAY and not self.transcript:
            raise ConfigError("replay backend requires a transcript path")
        if self.temperature < 0:
            raise ConfigError("temperature must be non-negative")
        if self.max_tokens < 1 or self.max_retries < 0 or self.timeout <= 0 or self.backoff_base < 0:
            raise ConfigError("max_tokens, max_retries, timeout and backoff_base must be positive")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ConfigError("mutation_rate must lie in [0, 1]")


def build_generator(
    cfg: GeneratorConfig,
    seed: "int | np.random.SeedSequence" = 0,
    grid: ParameterGrid = DEFAULT_GRID,
) -> CandidateGenerator:
    if cfg.backend is Backend.MOCK:
        return MockMutatorGenerator(seed, grid=grid, mutation_rate=cfg.mutation_rate)
    if cfg.backend is Backend.REPLAY:
        assert cfg.transcript is not None
        return ReplayGenerator.from_transcript(cfg.transcript, trial=cfg.replay_trial)
    assert cfg.endpoint and cfg.model and cfg.api_key_env
    return ChatCompletionGenerator(
        cfg.endpoint,
        cfg.model,
        cfg.api_key_env,
        temperature=cfg.temperature,
        max_tokens=cfg.max_tokens,
        timeout=cfg.timeout,
        max_retries=cfg.max_retries,
        backoff_base=cfg.backoff_base,
    )


def generate(prompt: MetaPrompt, cfg: GeneratorConfig, rng_seed: int = 0) -> str:
    """One-shot form: build a generator for `cfg` and return its raw response text."""
    return build_generator(cfg, rng_seed).generate(prompt).text
