import numpy as np
import pytest

from latticeforge.errors import ConfigError
from latticeforge.evaluate.surrogate import SurrogateEvaluator
from latticeforge.lattice.grid import parse_values, serialize
from latticeforge.optimize import REFERENCE_DESIGNS, GaConfig, run_ga
from latticeforge.optimize.ga import _reflect


def _nondecreasing(values):
    return all(b >= a for a, b in zip(values, values[1:]))


def test_seed_sweep_reaches_a_high_mean():
    evaluator = SurrogateEvaluator()
    reports = [run_ga(evaluator, seed=seed) for seed in range(10)]
    for r in reports:
        assert _nondecreasing(r.progression)
        assert r.engine == "ga" and r.strategy is None
    assert np.mean([r.best_score for r in reports]) >= 99.0


def test_report_shape():
    ga = GaConfig(population=8, generations=5, elitism=2)
    report = run_ga(SurrogateEvaluator(), ga=ga, seed=3)
    assert report.total_steps == 5
    assert report.evaluations_per_step == [8, 6, 6, 6, 6, 6]
    assert report.total_evaluations == 8 + 5 * 6
    assert len(report.progression) == 6


def test_progression_tracks_running_maximum():
    report = run_ga(SurrogateEvaluator(), ga=GaConfig(generations=10), seed=1)
    running = -np.inf
    for outcome, best in zip(report.outcomes, report.progression):
        batch = max(res.score for _, res in outcome.candidates)
        running = max(running, batch)
        assert best == running


def test_identical_population_without_mutation_is_a_fixpoint():
    sol = parse_values(REFERENCE_DESIGNS[0])
    ga = GaConfig(population=6, generations=4, mutation_rate=0.0)
    report = run_ga(SurrogateEvaluator(), ga=ga, seed=0, initial_population=[sol] * 6)
    for outcome in report.outcomes:
        assert {serialize(s) for s, _ in outcome.candidates} == {REFERENCE_DESIGNS[0]}
    assert report.steps_to_best == 0


def test_no_variation_with_full_elitism_keeps_the_initial_best():
    population = [parse_values(text) for text in REFERENCE_DESIGNS] * 2
    ga = GaConfig(population=6, generations=5, crossover_rate=0.0, mutation_rate=0.0, elitism=5)
    report = run_ga(SurrogateEvaluator(), ga=ga, seed=0, initial_population=population)
    assert report.steps_to_best == 0
    assert report.progression == [report.progression[0]] * 6
    assert report.best_solution in REFERENCE_DESIGNS


def test_initial_population_size_must_match():
    with pytest.raises(ConfigError):
        run_ga(SurrogateEvaluator(), ga=GaConfig(population=4), initial_population=[parse_values(REFERENCE_DESIGNS[0])])


def test_target_stop_ends_early():
    report = run_ga(SurrogateEvaluator(), ga=GaConfig(target_stop=float("-inf")), seed=0)
    assert report.total_steps == 0


def test_reflection_at_bounds():
    lows, highs = np.array([1, 0]), np.array([50, 10])
    assert _reflect(np.array([51, -1]), lows, highs).tolist() == [49, 1]
    assert _reflect(np.array([0, 11]), lows, highs).tolist() == [2, 9]
    assert _reflect(np.array([25, 5]), lows, highs).tolist() == [25, 5]


def test_determinism():
    ga = GaConfig(generations=6)
    assert run_ga(SurrogateEvaluator(), ga=ga, seed=5).to_dict() == run_ga(SurrogateEvaluator(), ga=ga, seed=5).to_dict()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"population": 1},
        {"generations": 0},
        {"elitism": 20},
        {"tournament_k": 0},
        {"crossover_rate": 1.5},
        {"mutation_rate": -0.1},
    ],
)
def test_invalid_ga_configs(kwargs):
    with pytest.raises(ConfigError):
        GaConfig(**kwargs)
