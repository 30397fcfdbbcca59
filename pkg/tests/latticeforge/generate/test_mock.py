import numpy as np
import pytest

from latticeforge.errors import GenerationFailed
from latticeforge.lattice.grid import parse_values, to_indices
from latticeforge.models.results import EvaluationResult
from latticeforge.models.solution import DEFAULT_GRID
from latticeforge.prompting.archive import SolutionArchive
from latticeforge.prompting.builder import MetaPrompt, PromptStrategy, build_meta_prompt
from latticeforge.prompting.parse import ParseMode, parse_response
from latticeforge.generate.mock import MockMutatorGenerator

WORSE = "1.4,2.2,2.6,4.2,5.0,4.7,3.7,4.1,8.0,4.9,7.0,5.0,6.0,5.0,8.0"
BEST = "1.8,2.4,2.9,4.0,5.0,4.7,3.4,3.9,5.0,4.6,5.0,5.0,8.0,5.0,7.0"


def _prompt(strategy=PromptStrategy.NO_CONTEXT, batch_size=5):
    archive = SolutionArchive()
    archive.insert(parse_values(BEST), EvaluationResult(kinf=1.0353, ppf=1.334, score=66.6))
    archive.insert(parse_values(WORSE), EvaluationResult(kinf=1.03754, ppf=1.361, score=44.08))
    return build_meta_prompt(strategy, archive, batch_size)


@pytest.mark.parametrize("strategy", list(PromptStrategy))
def test_reply_parses_to_exactly_batch_size_candidates(strategy):
    gen = MockMutatorGenerator(0)
    for batch_size in (1, 3, 5):
        out = gen.generate(_prompt(strategy, batch_size))
        result = parse_response(out.text, mode=ParseMode.STRICT)
        assert len(result.candidates) == batch_size
        assert result.rejects == []


def test_children_stay_within_one_step_of_the_best_pair():
    parent = to_indices(parse_values(BEST), DEFAULT_GRID)
    out = MockMutatorGenerator(3, mutation_rate=1.0).generate(_prompt())
    for child in parse_response(out.text).candidates:
        diff = np.abs(to_indices(child, DEFAULT_GRID) - parent)
        assert diff.max() <= 1
        assert DEFAULT_GRID.contains(child)


def test_same_seed_same_replies():
    a, b = MockMutatorGenerator(11), MockMutatorGenerator(11)
    prompt = _prompt()
    assert [a.generate(prompt).text for _ in range(4)] == [b.generate(prompt).text for _ in range(4)]


def test_zero_mutation_rate_copies_the_parent():
    out = MockMutatorGenerator(0, mutation_rate=0.0).generate(_prompt(batch_size=2))
    assert out.text.splitlines() == [f"<sol> {BEST} <\\sol>"] * 2


def test_prompt_without_solutions_fails():
    prompt = MetaPrompt(text="nothing here", strategy=PromptStrategy.NO_CONTEXT, batch_size=5, pairs=0)
    with pytest.raises(GenerationFailed):
        MockMutatorGenerator(0).generate(prompt)


def test_mutation_rate_is_validated():
    with pytest.raises(ValueError):
        MockMutatorGenerator(0, mutation_rate=1.5)
