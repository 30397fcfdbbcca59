import json

import pytest

from latticeforge.cli import main
from latticeforge.optimize.config import REFERENCE_DESIGNS

SOLUTION = REFERENCE_DESIGNS[1]


def test_evaluate_prints_json(capsys):
    assert main(["evaluate", "--solution", SOLUTION]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["solution"] == SOLUTION
    assert set(data) == {"solution", "kinf", "ppf", "score"}
    assert data["ppf"] >= 1.0


def test_evaluate_rejects_off_grid_solution(capsys):
    assert main(["evaluate", "--solution", SOLUTION.replace("1.8", "1.85", 1)]) == 1
    assert "latticeforge: error:" in capsys.readouterr().err


def test_prompt_detailed(capsys):
    assert main(["prompt", "--strategy", "detailed", "--batch-size", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("You are an optimization agent")
    assert "Generate exactly 4 new solutions" in out


def test_prompt_from_reference_designs(capsys):
    assert main(["prompt", "--initial", "reference"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Your task is to generate solutions from an optimization problem")
    for text in REFERENCE_DESIGNS:
        assert f"<sol> {text} <\\sol>" in out


def test_optimize_writes_report(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    run_log = tmp_path / "runlog.jsonl"
    code = main(
        ["optimize", "--max-steps", "3", "--seed", "5", "--output", str(out_file), "--run-log", str(run_log)]
    )
    assert code == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed == json.loads(out_file.read_text(encoding="utf-8"))
    assert printed["seed"] == 5 and printed["total_steps"] == 3
    assert len(run_log.read_text(encoding="utf-8").splitlines()) == 3


def test_optimize_ga_engine(capsys):
    assert main(["optimize", "--engine", "ga", "--generations", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["engine"] == "ga" and data["total_steps"] == 2


def test_trials_compare_strategies(tmp_path, capsys):
    out_dir = tmp_path / "runs"
    code = main(
        [
            "trials",
            "--strategy", "no_context",
            "--strategy", "detailed",
            "--trials", "2",
            "--max-steps", "3",
            "--output-dir", str(out_dir),
        ]
    )
    assert code == 0
    tables = capsys.readouterr().out
    assert "| opro / no_context" in tables and "| opro / detailed" in tables
    assert (out_dir / "comparison.md").read_text(encoding="utf-8") == tables
    bars = (out_dir / "comparison.svg").read_text(encoding="utf-8")
    assert bars.count('data-method="opro / no_context"') == 2
    assert bars.count('data-method="opro / detailed"') == 2
    lines = (out_dir / "comparison_progression.svg").read_text(encoding="utf-8")
    assert lines.count("<polyline") == 2
    run_dirs = sorted(p for p in out_dir.iterdir() if p.is_dir())
    assert [p.name.split("-")[1] for p in run_dirs] == ["detailed", "no_context"]

    assert main(["report", str(run_dirs[0])]) == 0
    assert "| opro / detailed" in capsys.readouterr().out


def test_unknown_subcommand_is_a_usage_error(capsys):
    assert main(["bake"]) == 1
    assert "usage:" in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "evaluate" in capsys.readouterr().out


def test_http_backend_without_key_is_a_config_error(monkeypatch, capsys):
    monkeypatch.delenv("LATTICEFORGE_CLI_KEY", raising=False)
    code = main(
        [
            "optimize",
            "--backend", "http",
            "--endpoint", "http://127.0.0.1:1/v1",
            "--model", "m",
            "--api-key-env", "LATTICEFORGE_CLI_KEY",
        ]
    )
    assert code == 1
    assert "LATTICEFORGE_CLI_KEY" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    assert main(["evaluate", "--solution", SOLUTION, "--config", str(tmp_path / "nope.json")]) == 1


def test_report_on_empty_directory_is_a_runtime_error(tmp_path):
    assert main(["report", str(tmp_path)]) == 2


@pytest.mark.parametrize("flag", ["--batch-size", "--max-steps"])
def test_invalid_loop_override(flag):
    assert main(["optimize", flag, "0"]) == 1
