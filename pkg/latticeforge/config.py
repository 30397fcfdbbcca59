# latticeforge/config.py
"""
Run configuration: one JSON document, one frozen dataclass per section.

    {
      "problem":   {"grid": {...ParameterGrid}, "map": "builtin" | "<path>"},
      "scoring":   {...ScoreConfig},
      "evaluator": {"kind": "surrogate" | "external", "surrogate": {...}, "command": [...], ...},
      "generator": {...GeneratorConfig},
      "engine":    "opro" | "ga" | "random",
      "loop": {...LoopConfig}, "ga": {...GaConfig}, "random": {...RandomConfig},
      "strategy": "no_context" | "detailed", "parse_mode": "snap" | "strict",
      "archive_capacity": 20, "trials": 10, "base_seed": 0,
      "output_dir": "runs", "jobs": 1
    }

Every key is optional; unknown keys are rejected.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Type, TypeVar, Union

from .errors import ConfigError
from .evaluate.factory import EvaluatorConfig
from .evaluate.surrogate import SurrogateConfig
from .generate.factory import GeneratorConfig
from .lattice.geometry import LatticeMap, load_lattice_map
from .models.solution import ParameterGrid
from .optimize.config import GaConfig, LoopConfig, RandomConfig
from .prompting.archive import DEFAULT_CAPACITY
from .prompting.builder import PromptStrategy
from .prompting.parse import ParseMode
from .scoring import ScoreConfig

ENGINES = ("opro", "ga", "random")

T = TypeVar("T")


def _section(cls: Type[T], data: Any, where: str) -> T:
    """Instantiate a flat config dataclass from a mapping, rejecting unknown keys."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"'{where}' must be an object")
    known = {f.name for f in dataclasses.fields(cls)}  # type: ignore[arg-type]
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown key(s) in '{where}': {', '.join(unknown)}")
    try:
        return cls(**data)
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid '{where}': {e}") from e


@dataclass(frozen=True)
class ProblemConfig:
    grid: ParameterGrid = field(default_factory=ParameterGrid)
    map: str = "builtin"

    def load_map(self) -> LatticeMap:
        return load_lattice_map(self.map)


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: _plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass(frozen=True)
class RunConfig:
    problem: ProblemConfig = field(default_factory=ProblemConfig)
    scoring: ScoreConfig = field(default_factory=ScoreConfig)
    evaluator: EvaluatorConfig = field(default_factory=EvaluatorConfig)
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    engine: str = "opro"
    loop: LoopConfig = field(default_factory=LoopConfig)
    ga: GaConfig = field(default_factory=GaConfig)
    random: RandomConfig = field(default_factory=RandomConfig)
    strategy: PromptStrategy = PromptStrategy.NO_CONTEXT
    parse_mode: ParseMode = ParseMode.SNAP_TO_GRID
    archive_capacity: int = DEFAULT_CAPACITY
    trials: int = 10
    base_seed: int = 0
    output_dir: str = "runs"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.engine not in ENGINES:
            raise ConfigError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        try:
            object.__setattr__(self, "strategy", PromptStrategy.parse(self.strategy))
            object.__setattr__(self, "parse_mode", ParseMode(self.parse_mode))
        except ValueError as e:
            raise ConfigError(str(e)) from e
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if self.archive_capacity < 1:
            raise ConfigError("archive_capacity must be at least 1")

    @property
    def label(self) -> str:
        return f"{self.engine}-{self.strategy.value}" if self.engine == "opro" else self.engine

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> RunConfig:
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a JSON object")
        top = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - top)
        if unknown:
            raise ConfigError(f"unknown configuration key(s): {', '.join(unknown)}")

        problem = dict(data.get("problem") or {})
        grid = _section(ParameterGrid, problem.pop("grid", None), "problem.grid")
        problem_cfg = _section(ProblemConfig, {**problem, "grid": grid}, "problem")

        evaluator = dict(data.get("evaluator") or {})
        surrogate = _section(SurrogateConfig, evaluator.pop("surrogate", None), "evaluator.surrogate")
        evaluator_cfg = _section(EvaluatorConfig, {**evaluator, "surrogate": surrogate}, "evaluator")

        scalars = {
            k: data[k]
            for k in ("engine", "strategy", "parse_mode", "archive_capacity", "trials", "base_seed", "output_dir", "jobs")
            if k in data
        }
        try:
            return cls(
                problem=problem_cfg,
                scoring=_section(ScoreConfig, data.get("scoring"), "scoring"),
                evaluator=evaluator_cfg,
                generator=_section(GeneratorConfig, data.get("generator"), "generator"),
                loop=_section(LoopConfig, data.get("loop"), "loop"),
                ga=_section(GaConfig, data.get("ga"), "ga"),
                random=_section(RandomConfig, data.get("random"), "random"),
                **scalars,
            )
        except TypeError as e:
            raise ConfigError(str(e)) from e

    def to_dict(self) -> Dict[str, Any]:
        return _plain(self)

    def digest(self) -> str:
        """Short hash of everything that affects results (not output_dir or jobs)."""
        payload = self.to_dict()
        payload.pop("output_dir")
        payload.pop("jobs")
        canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]

    def replace(self, **changes: Any) -> RunConfig:
        try:
            return dataclasses.replace(self, **changes)
        except ValueError as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(str(e)) from e


def load_config(path: Optional[Union[str, os.PathLike]] = None) -> RunConfig:
    """Read a JSON config file; no path gives the defaults."""
    if path is None:
        return RunConfig()
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config '{path}': {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config '{path}' is not valid JSON: {e}") from e
    return RunConfig.from_dict(data)
