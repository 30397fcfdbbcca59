# latticeforge/prompting/builder.py
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Optional

from ..errors import EmptyArchive
from ..lattice.geometry import LatticeMap, default_lattice_map, render_half_map
from ..lattice.grid import serialize
from ..models.results import EvaluationResult
from ..models.solution import SolutionVector
from ..scoring import format_score
from .archive import SolutionArchive

TEMPLATE_VERSION = "v1"

SOL_OPEN = "<sol>"
SOL_CLOSE = "<\\sol>"


class PromptStrategy(str, Enum):
    NO_CONTEXT = "no_context"
    DETAILED_CONTEXT = "detailed"

    @classmethod
    def parse(cls, value: str) -> PromptStrategy:
        key = value.strip().lower().replace("-", "_")
        aliases = {
            "none": cls.NO_CONTEXT,
            "no_context": cls.NO_CONTEXT,
            "nocontext": cls.NO_CONTEXT,
            "detailed": cls.DETAILED_CONTEXT,
            "detailed_context": cls.DETAILED_CONTEXT,
        }
        if key not in aliases:
            raise ValueError(f"unknown prompt strategy {value!r} (use 'detailed' or 'no_context')")
        return aliases[key]

    @property
    def template_name(self) -> str:
        return "detailed_context.txt" if self is PromptStrategy.DETAILED_CONTEXT else "no_context.txt"


@dataclass(frozen=True)
class MetaPrompt:
    text: str
    strategy: PromptStrategy
    batch_size: int
    pairs: int


@lru_cache(maxsize=None)
def load_template(strategy: PromptStrategy, version: str = TEMPLATE_VERSION) -> str:
    path = resources.files("latticeforge.prompts").joinpath(version, strategy.template_name)
    return path.read_text(encoding="utf-8")


def render_solution(sol: SolutionVector) -> str:
    return f"{SOL_OPEN} {serialize(sol)} {SOL_CLOSE}"


def render_pair(sol: SolutionVector, result: EvaluationResult, strategy: PromptStrategy) -> str:
    lines = [render_solution(sol)]
    if strategy is PromptStrategy.DETAILED_CONTEXT:
        lines.append(f"kinf: {result.kinf:.5f}, ppf: {result.ppf:.3f}")
    lines.append(f"score: {format_score(result.score)}")
    return "\n".join(lines)


def build_meta_prompt(
    strategy: PromptStrategy,
    archive: SolutionArchive,
    batch_size: int,
    *,
    lattice: Optional[LatticeMap] = None,
    version: str = TEMPLATE_VERSION,
) -> MetaPrompt:
    """Fill the strategy's template with the archive (ascending score) and the batch size."""
    if len(archive) == 0:
        raise EmptyArchive("cannot build a meta-prompt from an empty archive")
    if batch_size < 1:
        raise ValueError("batch_size must be at least 1")

    pairs = "\n\n".join(render_pair(sol, res, strategy) for sol, res in archive.entries)
    text = (
        load_template(strategy, version)
        .replace("{lattice_map}", render_half_map(lattice or default_lattice_map()))
        .replace("{batch_size}", str(batch_size))
        .replace("{solution_score_pairs}", pairs)
    )
    return MetaPrompt(text=text, strategy=strategy, batch_size=batch_size, pairs=len(archive))
