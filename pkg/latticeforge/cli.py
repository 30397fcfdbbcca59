# latticeforge/cli.py
"""
Command-line entry point.

    latticeforge evaluate --solution "1.4,2.2,..."
    latticeforge optimize --engine opro --strategy detailed --backend mock
    latticeforge trials   --engine opro --engine ga --strategy no_context --strategy detailed
    latticeforge prompt   --strategy detailed
    latticeforge report   runs/opro-detailed-0123abcd4567

Exit status: 0 on success, 1 on usage or configuration errors, 2 on runtime errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import logging
import shlex
import sys
from pathlib import Path
from typing import Any, Dict, NoReturn, Optional, Sequence

from .config import ENGINES, RunConfig, load_config
from .errors import ConfigError, EvaluationError, GenerationFailed, InvalidSolution, LatticeMapError
from .evaluate.factory import build_evaluator
from .generate.factory import Backend
from .generate.records import RunLog
from .lattice.grid import parse_values, serialize
from .optimize.config import INITIAL_RULES
from .optimize.opro import seed_archive, trial_streams
from .prompting.builder import PromptStrategy, build_meta_prompt
from .prompting.parse import ParseMode
from .runner.reports import emit_comparison_charts, emit_markdown_tables, load_reports, write_reports
from .runner.trials import run_single, run_trials
from .scoring import evaluate_and_score

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    """Usage errors print the help text to stderr and exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_help(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON run configuration (flags override its values)")
    p.add_argument("--map", dest="lattice_map", help="lattice map file, or 'builtin'")
    p.add_argument("--evaluator-command", help="external evaluator command line (replaces the surrogate)")
    p.add_argument("--no-cache", action="store_true", help="disable the per-run evaluation cache")


def _add_run(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=[b.value for b in Backend], help="candidate generator")
    p.add_argument("--endpoint", help="chat-completion base URL (http backend)")
    p.add_argument("--model", help="model name (http backend)")
    p.add_argument("--api-key-env", help="environment variable holding the API key")
    p.add_argument("--transcript", help="JSONL transcript (replay backend)")
    p.add_argument("--batch-size", type=int)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--initial", choices=INITIAL_RULES, help="how step 0 fills the archive")
    p.add_argument("--generations", type=int)
    p.add_argument("--budget", type=int, help="random-search evaluation budget")
    p.add_argument("--parse-mode", choices=[m.value for m in ParseMode])
    p.add_argument("--plateau-stop", action="store_true", help="stop once a batch maximum improves on the previous one by less than epsilon")
    p.add_argument("--output-dir")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latticeforge", description="LLM-guided fuel-lattice optimization.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("evaluate", help="evaluate one solution and print kinf, ppf and score as JSON")
    _add_common(p)
    p.add_argument("--solution", required=True, help="15 comma-separated values")

    p = sub.add_parser("optimize", help="run a single trial of any engine")
    _add_common(p)
    _add_run(p)
    p.add_argument("--engine", choices=ENGINES)
    p.add_argument("--strategy")
    p.add_argument("--seed", type=int, default=None, help="trial seed (default: base_seed)")
    p.add_argument("--run-log", help="append prompt/response records to this JSONL file")
    p.add_argument("--output", help="also write the trial report JSON here")

    p = sub.add_parser("trials", help="run multi-trial experiments and write reports")
    _add_common(p)
    _add_run(p)
    p.add_argument("--engine", action="append", choices=ENGINES, help="repeatable")
    p.add_argument("--strategy", action="append", help="repeatable")
    p.add_argument("--trials", type=int)
    p.add_argument("--base-seed", type=int)
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("prompt", help="print the meta-prompt a run would send first")
    _add_common(p)
    p.add_argument("--strategy")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--batch-size", type=int)
    p.add_argument("--initial", choices=INITIAL_RULES)

    p = sub.add_parser("report", help="regenerate tables and charts from stored trial JSON")
    p.add_argument("run_dirs", nargs="+", metavar="DIR")
    return parser


def _replace(section: Any, **changes: Any) -> Any:
    changes = {k: v for k, v in changes.items() if v is not None}
    if not changes:
        return section
    try:
        return dataclasses.replace(section, **changes)
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e)) from e


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Config file values with command-line flags applied on top."""
    cfg = load_config(getattr(args, "config", None))
    get = lambda name: getattr(args, name, None)  # noqa: E731

    problem = _replace(cfg.problem, map=get("lattice_map"))
    evaluator = cfg.evaluator
    if get("evaluator_command"):
        evaluator = _replace(evaluator, kind="external", command=shlex.split(args.evaluator_command))
    if get("no_cache"):
        evaluator = _replace(evaluator, cache=False)

    generator = _replace(
        cfg.generator,
        backend=get("backend"),
        endpoint=get("endpoint"),
        model=get("model"),
        api_key_env=get("api_key_env"),
        transcript=get("transcript"),
    )
    loop = _replace(
        cfg.loop,
        batch_size=get("batch_size"),
        max_steps=get("max_steps"),
        initial=get("initial"),
        plateau_stop=True if get("plateau_stop") else None,
    )
    strategy = get("strategy")
    engine = get("engine")
    return cfg.replace(
        problem=problem,
        evaluator=evaluator,
        generator=generator,
        loop=loop,
        ga=_replace(cfg.ga, generations=get("generations")),
        random=_replace(cfg.random, budget=get("budget")),
        engine=engine if isinstance(engine, str) else cfg.engine,
        strategy=PromptStrategy.parse(strategy) if isinstance(strategy, str) else cfg.strategy,
        parse_mode=ParseMode(args.parse_mode) if get("parse_mode") else cfg.parse_mode,
        trials=cfg.trials if get("trials") is None else args.trials,
        base_seed=cfg.base_seed if get("base_seed") is None else args.base_seed,
        jobs=cfg.jobs if get("jobs") is None else args.jobs,
        output_dir=get("output_dir") or cfg.output_dir,
    )


def _write(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(data: Dict[str, Any]) -> None:
    _write(json.dumps(data, indent=2))


def cmd_evaluate(args: argparse.Namespace, cfg: RunConfig) -> int:
    sol = parse_values(args.solution, cfg.problem.grid)
    evaluator = build_evaluator(cfg.evaluator, cfg.problem.load_map())
    result = evaluate_and_score(evaluator, sol, cfg.scoring)
    _dump({"solution": serialize(sol), "kinf": result.kinf, "ppf": result.ppf, "score": result.score})
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace, cfg: RunConfig, verbose: bool) -> int:
    trial = 0
    if args.seed is not None:
        cfg = cfg.replace(base_seed=args.seed)
    if args.run_log:
        with RunLog(args.run_log, truncate=False) as run_log:
            report = run_single(cfg, trial, run_log=run_log, log=verbose)
    else:
        report = run_single(cfg, trial, log=verbose)
    data = report.to_dict()
    if args.output:
        Path(args.output).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    _dump(data)
    return EXIT_OK


def cmd_trials(args: argparse.Namespace, cfg: RunConfig, verbose: bool) -> int:
    engines = args.engine or [cfg.engine]
    strategies = [PromptStrategy.parse(s) for s in args.strategy] if args.strategy else [cfg.strategy]
    stats = []
    groups = []
    seen = set()
    for engine, strategy in itertools.product(engines, strategies):
        combo = cfg.replace(engine=engine, strategy=strategy)
        if combo.label in seen:
            continue
        seen.add(combo.label)
        result = run_trials(combo, log=verbose)
        stats.extend(result.stats)
        # one run directory holds exactly one engine/strategy
        groups.append((result.stats[0].label, result.reports))
        logging.getLogger(__name__).info("wrote %s", result.run_dir)
    tables = emit_markdown_tables(stats)
    if len(seen) > 1:
        out = Path(cfg.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "comparison.md").write_text(tables, encoding="utf-8")
        emit_comparison_charts(stats, groups, out)
    _write(tables)
    return EXIT_OK


def cmd_prompt(args: argparse.Namespace, cfg: RunConfig) -> int:
    seed = cfg.base_seed if args.seed is None else args.seed
    lattice = cfg.problem.load_map()
    evaluator = build_evaluator(cfg.evaluator, lattice)
    init_seq, _ = trial_streams(seed)
    archive, _ = seed_archive(
        evaluator, cfg.scoring, cfg.loop, init_seq, grid=cfg.problem.grid, capacity=cfg.archive_capacity
    )
    prompt = build_meta_prompt(cfg.strategy, archive, cfg.loop.batch_size, lattice=lattice)
    sys.stdout.write(prompt.text)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    stats = []
    for run_dir in args.run_dirs:
        stats.extend(write_reports(Path(run_dir), load_reports(Path(run_dir))))
    _write(emit_markdown_tables(stats))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    verbose = args.verbose > 0

    try:
        if args.command == "report":
            return cmd_report(args)
        cfg = resolve_config(args)
        if args.command == "evaluate":
            return cmd_evaluate(args, cfg)
        if args.command == "optimize":
            return cmd_optimize(args, cfg, verbose)
        if args.command == "trials":
            return cmd_trials(args, cfg, verbose)
        return cmd_prompt(args, cfg)
    except (ConfigError, InvalidSolution, LatticeMapError, ValueError) as e:
        sys.stderr.write(f"latticeforge: error: {e}\n")
        return EXIT_USAGE
    except (GenerationFailed, EvaluationError, OSError) as e:
        sys.stderr.write(f"latticeforge: {type(e).__name__}: {e}\n")
        return EXIT_RUNTIME
