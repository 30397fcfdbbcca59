# latticeforge/optimize/opro.py
from __future__ import annotations

import logging
from typing import List, Optional, Tuple, Union

import numpy as np

from .._logging import resolve_logger
from ..evaluate.base import Evaluator
from ..generate.base import CandidateGenerator
from ..generate.factory import GeneratorConfig, build_generator
from ..generate.records import GenerationRecord, RunLog
from ..lattice.geometry import LatticeMap
from ..lattice.grid import parse_values, random_solution
from ..models.results import EvaluationResult, TrialReport
from ..models.solution import DEFAULT_GRID, ParameterGrid, SolutionVector
from ..prompting.archive import DEFAULT_CAPACITY, SolutionArchive
from ..prompting.builder import PromptStrategy, build_meta_prompt
from ..prompting.parse import ParseMode, parse_response
from ..scoring import DEFAULT_SCORING, ScoreConfig
from .config import REFERENCE_DESIGNS, LoopConfig
from .trajectory import Trajectory, evaluate_batch


def trial_streams(seed: int) -> Tuple[np.random.SeedSequence, np.random.SeedSequence]:
    """Independent streams for the initial archive and the generator of one trial."""
    init_seq, gen_seq = np.random.SeedSequence(seed).spawn(2)
    return init_seq, gen_seq


def seed_archive(
    evaluator: Evaluator,
    scoring: ScoreConfig,
    loop: LoopConfig,
    seed: Union[int, np.random.SeedSequence],
    *,
    grid: ParameterGrid = DEFAULT_GRID,
    capacity: int = DEFAULT_CAPACITY,
) -> Tuple[SolutionArchive, List[Tuple[SolutionVector, EvaluationResult]]]:
    """Evaluate `loop.initial_solutions` starting solutions (per `loop.initial`) into a fresh archive."""
    rng = np.random.default_rng(seed)
    initial: List[SolutionVector] = []
    if loop.initial == "reference":
        initial = [parse_values(text, grid, snap=True) for text in REFERENCE_DESIGNS[: loop.initial_solutions]]
    while len(initial) < loop.initial_solutions:
        initial.append(random_solution(grid, rng))
    results = evaluate_batch(evaluator, initial, scoring, loop.workers)
    archive = SolutionArchive(capacity)
    for sol, res in zip(initial, results):
        archive.insert(sol, res)
    return archive, list(zip(initial, results))


def run_opro(
    strategy: Union[PromptStrategy, str],
    generator: Union[GeneratorConfig, CandidateGenerator],
    evaluator: Evaluator,
    scoring: ScoreConfig = DEFAULT_SCORING,
    loop: LoopConfig = LoopConfig(),
    seed: int = 0,
    *,
    grid: ParameterGrid = DEFAULT_GRID,
    lattice: Optional[LatticeMap] = None,
    parse_mode: ParseMode = ParseMode.SNAP_TO_GRID,
    archive_capacity: int = DEFAULT_CAPACITY,
    run_log: Optional[RunLog] = None,
    trial: int = 0,
    logger: Optional[logging.Logger] = None,
    log: bool = False,
) -> TrialReport:
    """
    Prompt-driven refinement loop.

    Step 0 evaluates `loop.initial_solutions` starting solutions into the archive.
    Each later step renders the archive into a meta-prompt, asks the generator
    for `loop.batch_size` candidates, evaluates what parses and folds the
    results back into the archive. The loop ends when the best score reaches
    `loop.target_stop`, after `loop.max_steps` steps, or (with plateau
    stopping on) when a batch maximum exceeds the previous batch maximum by
    less than `loop.epsilon`. A falling maximum also stops the loop.

    Raises:
        GenerationFailed: propagated from the generator.
        EvaluationError: propagated from the evaluator.
    """
    log = resolve_logger(logger=logger, enabled=log, name=__name__, level=logging.DEBUG, trial=trial)
    strategy = PromptStrategy.parse(strategy)
    init_seq, gen_seq = trial_streams(seed)
    if isinstance(generator, GeneratorConfig):
        generator = build_generator(generator, gen_seq, grid)

    archive, initial = seed_archive(
        evaluator, scoring, loop, init_seq, grid=grid, capacity=archive_capacity
    )
    trajectory = Trajectory()
    trajectory.record(0, initial)
    log.info(f"step 0: initial best {trajectory.best_score:.4f}")

    previous_batch_best: Optional[float] = None
    step = 0
    while step < loop.max_steps and not trajectory.reached(loop.target_stop):
        step += 1
        prompt = build_meta_prompt(strategy, archive, loop.batch_size, lattice=lattice)
        output = generator.generate(prompt)
        if run_log is not None:
            run_log.write(
                GenerationRecord(
                    step=step,
                    prompt=prompt.text,
                    response=output.text,
                    latency=output.latency,
                    prompt_tokens=output.prompt_tokens,
                    completion_tokens=output.completion_tokens,
                    trial=trial,
                    backend=generator.backend,
                )
            )

        parsed = parse_response(output.text, grid, parse_mode)
        candidates = parsed.candidates[: loop.batch_size]
        if len(parsed.candidates) > loop.batch_size:
            log.debug(f"step {step}: ignoring {len(parsed.candidates) - loop.batch_size} extra candidates")
        if not candidates:
            log.warning(f"step {step}: no usable candidates ({len(parsed.rejects)} rejected)")

        results = evaluate_batch(evaluator, candidates, scoring, loop.workers)
        for sol, res in zip(candidates, results):
            archive.insert(sol, res)
        outcome = trajectory.record(step, list(zip(candidates, results)), rejects=len(parsed.rejects))
        log.info(
            f"step {step}: {len(candidates)} evaluated, "
            f"{outcome.rejects} rejected, best {outcome.best_so_far:.4f}"
        )

        batch_best = outcome.batch_best
        if loop.plateau_stop and batch_best is not None and previous_batch_best is not None:
            if batch_best - previous_batch_best < loop.epsilon:
                log.info(f"plateau at step {step}")
                break
        if batch_best is not None:
            previous_batch_best = batch_best

    return trajectory.to_report(trial=trial, seed=seed, engine="opro", strategy=strategy.value)
