# latticeforge/generate/mock.py
from __future__ import annotations

import numpy as np

from ..errors import GenerationFailed
from ..lattice.grid import from_indices, to_indices
from ..models.solution import DEFAULT_GRID, N_GENES, ParameterGrid
from ..prompting.builder import MetaPrompt, render_solution
from ..prompting.parse import ParseMode, parse_response
from .base import GenerationOutput


class MockMutatorGenerator:
    """
    Offline stand-in for an LLM: reads the best solution from the prompt (the
    last pair, since archives render ascending) and answers with batch_size
    mutants, each gene moved one grid step up or down with `mutation_rate`.
    """

    backend = "mock"

    def __init__(
        self,
        seed: "int | np.random.SeedSequence" = 0,
        *,
        grid: ParameterGrid = DEFAULT_GRID,
        mutation_rate: float = 0.3,
    ):
        if not 0.0 <= mutation_rate <= 1.0:
            raise ValueError("mutation_rate must lie in [0, 1]")
        self.grid = grid
        self.mutation_rate = mutation_rate
        self.rng = np.random.default_rng(seed)
        lows, highs, _ = grid.gene_bounds()
        self._lows = np.array(lows)
        self._highs = np.array(highs)

    def generate(self, prompt: MetaPrompt) -> GenerationOutput:
        shown = parse_response(prompt.text, self.grid, ParseMode.SNAP_TO_GRID).candidates
        if not shown:
            raise GenerationFailed("mock generator found no solution in the prompt")
        parent = to_indices(shown[-1], self.grid)

        lines = []
        for _ in range(prompt.batch_size):
            mask = self.rng.random(N_GENES) < self.mutation_rate
            signs = self.rng.choice(np.array([-1, 1]), size=N_GENES)
            child = np.clip(parent + mask * signs, self._lows, self._highs)
            lines.append(render_solution(from_indices(child, self.grid)))
        return GenerationOutput(text="\n".join(lines))
