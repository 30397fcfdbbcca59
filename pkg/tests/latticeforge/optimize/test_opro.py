import numpy as np
import pytest

from latticeforge.errors import ConfigError, GenerationFailed, ReplayExhausted
from latticeforge.evaluate.cache import CachedEvaluator
from latticeforge.evaluate.surrogate import SurrogateEvaluator
from latticeforge.generate.factory import GeneratorConfig
from latticeforge.generate.records import RunLog, read_records
from latticeforge.generate.replay import ReplayGenerator
from latticeforge.lattice.grid import parse_values, serialize
from latticeforge.optimize import REFERENCE_DESIGNS, LoopConfig, run_opro, seed_archive
from latticeforge.prompting.builder import PromptStrategy
from latticeforge.prompting.parse import ParseMode
from latticeforge.scoring import DEFAULT_SCORING, evaluate_and_score

NO_CONTEXT_STEP_0 = """<sol> 2.2,2.9,3.3,4.6,5.2,5.3,4.1,4.3,8.2,5.3,7.3,5.3,8.3,5.3,9.3 <\\sol>
<sol> 2.3,3.0,3.4,4.7,5.3,5.4,4.2,4.4,8.3,5.4,7.4,5.4,8.4,5.4,9.4 <\\sol>
<sol> 2.4,3.1,3.5,4.8,5.4,5.5,4.3,4.5,8.4,5.5,7.5,5.5,8.5,5.5,9.5 <\\sol>"""

NO_CONTEXT_STEP_47 = """<sol> 1.8,2.5,3.0,4.3,6.0,5.0,3.8,4.0,8.1,5.0,7.1,5.1,8.1,5.1,13.8 <\\sol>
<sol> 1.9,2.6,3.1,4.4,6.0,5.1,3.9,4.1,8.2,5.1,7.2,5.2,8.2,5.2,13.9 <\\sol>
<sol> 2.0,2.7,3.2,4.5,6.0,5.2,4.0,4.2,8.3,5.2,7.3,5.3,8.3,5.3,14.0 <\\sol"""


UNIFORM_DESIGN = "5.0,5.0,5.0,5.0,5.0,5.0,5.0,5.0,0.0,5.0,0.0,5.0,0.0,5.0,0.0"


def _nondecreasing(values):
    return all(b >= a for a, b in zip(values, values[1:]))


class _Counting:
    pure = True

    def __init__(self, inner):
        self.inner = inner
        self.calls = 0

    def evaluate(self, sol):
        self.calls += 1
        return self.inner.evaluate(sol)


def test_mock_run_from_reference_designs_converges():
    loop = LoopConfig(initial="reference")
    report = run_opro(PromptStrategy.NO_CONTEXT, GeneratorConfig(), SurrogateEvaluator(), loop=loop, seed=0)
    assert report.engine == "opro" and report.strategy == "no_context"
    assert _nondecreasing(report.progression)
    assert report.best_score >= 99.0
    assert report.total_steps <= 60
    assert report.progression[report.steps_to_best] == report.best_score
    assert all(v < report.best_score for v in report.progression[: report.steps_to_best])


@pytest.mark.parametrize("strategy", ["no_context", "detailed"])
def test_seed_sweep_from_reference_designs(strategy):
    loop = LoopConfig(initial="reference")
    reports = [run_opro(strategy, GeneratorConfig(), SurrogateEvaluator(), loop=loop, seed=s) for s in range(10)]
    for r in reports:
        assert _nondecreasing(r.progression)
        assert r.total_steps <= 60
    assert np.mean([r.best_score for r in reports]) >= 99.0


def test_mock_run_from_random_designs_improves():
    report = run_opro(PromptStrategy.DETAILED_CONTEXT, GeneratorConfig(), SurrogateEvaluator(), seed=0)
    assert _nondecreasing(report.progression)
    assert len(report.progression) == report.total_steps + 1 == 61
    assert report.best_score > report.progression[0]
    assert report.evaluations_per_step[0] == 3
    assert all(n == 5 for n in report.evaluations_per_step[1:])
    assert report.total_evaluations == 3 + 5 * 60


def test_seed_determinism():
    a = run_opro("no_context", GeneratorConfig(), SurrogateEvaluator(), loop=LoopConfig(max_steps=10), seed=4)
    b = run_opro("no_context", GeneratorConfig(), SurrogateEvaluator(), loop=LoopConfig(max_steps=10), seed=4)
    assert a.to_dict() == b.to_dict()


def test_cache_does_not_change_the_trajectory():
    loop = LoopConfig(max_steps=15)
    plain = run_opro("detailed", GeneratorConfig(), SurrogateEvaluator(), loop=loop, seed=2)
    counting = _Counting(SurrogateEvaluator())
    cached = CachedEvaluator(counting)
    memo = run_opro("detailed", GeneratorConfig(), cached, loop=loop, seed=2)
    assert plain.to_dict() == memo.to_dict()
    assert counting.calls == cached.misses
    assert cached.hits + cached.misses == memo.total_evaluations


def test_reached_target_stops_at_step_zero():
    loop = LoopConfig(target_stop=float("-inf"))
    gen = ReplayGenerator([])
    report = run_opro("no_context", gen, SurrogateEvaluator(), loop=loop, seed=0)
    assert report.total_steps == 0
    assert report.steps_to_best == 0
    assert len(report.progression) == 1


def test_replay_in_strict_mode_counts_rejects():
    gen = ReplayGenerator([NO_CONTEXT_STEP_0, NO_CONTEXT_STEP_47])
    report = run_opro(
        "no_context",
        gen,
        SurrogateEvaluator(),
        loop=LoopConfig(max_steps=2),
        parse_mode=ParseMode.STRICT,
        seed=0,
    )
    assert report.reject_counts == [0, 3, 3]
    assert report.evaluations_per_step == [3, 0, 0]
    assert report.progression[0] == report.progression[1] == report.progression[2]
    assert [o.rejects for o in report.outcomes] == [0, 3, 3]


def test_replay_in_snap_mode_evaluates_everything():
    gen = ReplayGenerator([NO_CONTEXT_STEP_0, NO_CONTEXT_STEP_47])
    report = run_opro("no_context", gen, SurrogateEvaluator(), loop=LoopConfig(max_steps=2), seed=0)
    assert report.evaluations_per_step == [3, 3, 3]
    assert report.reject_counts == [0, 0, 0]
    gads = [sol.gad[3] for sol, _ in report.outcomes[2].candidates]
    assert gads == [10.0, 10.0, 10.0]


def test_exhausted_replay_propagates():
    gen = ReplayGenerator([NO_CONTEXT_STEP_0])
    with pytest.raises(GenerationFailed):
        run_opro("no_context", gen, SurrogateEvaluator(), loop=LoopConfig(max_steps=3), seed=0)
    with pytest.raises(ReplayExhausted):
        run_opro("no_context", ReplayGenerator([]), SurrogateEvaluator(), seed=0)


def test_extra_candidates_beyond_batch_size_are_ignored():
    gen = ReplayGenerator([NO_CONTEXT_STEP_0])
    report = run_opro("no_context", gen, SurrogateEvaluator(), loop=LoopConfig(batch_size=2, max_steps=1), seed=0)
    assert report.evaluations_per_step == [3, 2]


def test_plateau_stop_on_repeated_batches():
    line = f"<sol> {REFERENCE_DESIGNS[1]} <\\sol>"
    gen = ReplayGenerator([line] * 10)
    loop = LoopConfig(max_steps=10, plateau_stop=True)
    report = run_opro("no_context", gen, SurrogateEvaluator(), loop=loop, seed=0)
    assert report.total_steps == 2
    assert gen.remaining == 8


def test_plateau_stop_on_falling_batch_maximum():
    evaluator = SurrogateEvaluator()
    first, second = REFERENCE_DESIGNS[0], UNIFORM_DESIGN
    s_first, s_second = (evaluate_and_score(evaluator, parse_values(t)).score for t in (first, second))
    assert s_first != s_second
    high, low = (first, second) if s_first > s_second else (second, first)
    gen = ReplayGenerator([f"<sol> {high} <\\sol>"] + [f"<sol> {low} <\\sol>"] * 3)
    loop = LoopConfig(max_steps=4, plateau_stop=True)
    report = run_opro("no_context", gen, evaluator, loop=loop, seed=0)
    assert report.total_steps == 2
    assert gen.remaining == 2


def test_plateau_stop_is_off_by_default():
    line = f"<sol> {REFERENCE_DESIGNS[1]} <\\sol>"
    gen = ReplayGenerator([line] * 4)
    report = run_opro("no_context", gen, SurrogateEvaluator(), loop=LoopConfig(max_steps=4), seed=0)
    assert report.total_steps == 4


def test_run_log_gets_one_record_per_step(tmp_path):
    path = tmp_path / "runlog.jsonl"
    with RunLog(path) as run_log:
        report = run_opro(
            "detailed",
            GeneratorConfig(),
            SurrogateEvaluator(),
            loop=LoopConfig(max_steps=4),
            seed=1,
            run_log=run_log,
            trial=7,
        )
    records = read_records(path)
    assert [r.step for r in records] == [1, 2, 3, 4]
    assert {r.trial for r in records} == {7}
    assert {r.backend for r in records} == {"mock"}
    assert records[0].prompt.startswith("You are an optimization agent")
    assert report.total_steps == 4


def test_seed_archive_reference_rule():
    evaluator = SurrogateEvaluator()
    archive, initial = seed_archive(evaluator, DEFAULT_SCORING, LoopConfig(initial="reference"), 0)
    assert [serialize(s) for s, _ in initial] == list(REFERENCE_DESIGNS)
    assert len(archive) == 3

    archive, initial = seed_archive(evaluator, DEFAULT_SCORING, LoopConfig(initial="reference", initial_solutions=5), 0)
    assert [serialize(s) for s, _ in initial[:3]] == list(REFERENCE_DESIGNS)
    assert len(initial) == 5

    _, initial = seed_archive(evaluator, DEFAULT_SCORING, LoopConfig(initial="reference", initial_solutions=1), 0)
    assert [serialize(s) for s, _ in initial] == [REFERENCE_DESIGNS[0]]


def test_seed_archive_random_rule_is_seeded():
    evaluator = SurrogateEvaluator()
    loop = LoopConfig(initial_solutions=4)
    _, a = seed_archive(evaluator, DEFAULT_SCORING, loop, np.random.SeedSequence(9))
    _, b = seed_archive(evaluator, DEFAULT_SCORING, loop, np.random.SeedSequence(9))
    assert [serialize(s) for s, _ in a] == [serialize(s) for s, _ in b]
    assert len(a) == 4


def test_reference_designs_are_on_the_grid():
    for text in REFERENCE_DESIGNS:
        assert serialize(parse_values(text)) == text


@pytest.mark.parametrize(
    "kwargs",
    [{"batch_size": 0}, {"max_steps": 0}, {"initial_solutions": 0}, {"initial": "lucky"}, {"workers": 0}],
)
def test_invalid_loop_configs(kwargs):
    with pytest.raises(ConfigError):
        LoopConfig(**kwargs)
