import pytest

from latticeforge.evaluate.surrogate import SurrogateEvaluator
from latticeforge.models.solution import DEFAULT_GRID
from latticeforge.lattice.grid import parse_values
from latticeforge.optimize import run_random_baseline


def test_budget_of_one_is_one_evaluation():
    report = run_random_baseline(SurrogateEvaluator(), budget=1, seed=0)
    assert report.total_evaluations == 1
    assert report.total_steps == 0
    assert report.steps_to_best == 0
    assert report.engine == "random"


def test_one_sample_per_step():
    report = run_random_baseline(SurrogateEvaluator(), budget=25, seed=2)
    assert report.evaluations_per_step == [1] * 25
    assert report.total_steps == 24
    assert all(b >= a for a, b in zip(report.progression, report.progression[1:]))
    assert DEFAULT_GRID.contains(parse_values(report.best_solution))


def test_same_seed_same_samples():
    a = run_random_baseline(SurrogateEvaluator(), budget=30, seed=8)
    b = run_random_baseline(SurrogateEvaluator(), budget=30, seed=8)
    assert a.to_dict() == b.to_dict()


def test_target_stop_ends_the_search():
    report = run_random_baseline(SurrogateEvaluator(), budget=30, seed=0, target_stop=float("-inf"))
    assert report.total_evaluations == 1


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        run_random_baseline(SurrogateEvaluator(), budget=0)
