from .config import RunConfig, load_config
from .errors import (
    AuthError,
    ConfigError,
    DegenerateSystem,
    EmptyArchive,
    EvaluationError,
    EvaluatorReportedError,
    EvaluatorTimeout,
    GenerationFailed,
    InvalidSolution,
    LatticeMapError,
    ProtocolError,
    ReplayExhausted,
    SpawnFailed,
    TransportError,
)
from .evaluate import (
    CachedEvaluator,
    EvaluatorConfig,
    ExternalEvaluator,
    SurrogateConfig,
    SurrogateEvaluator,
    build_evaluator,
    external_evaluate,
    surrogate_evaluate,
)
from .generate import (
    GenerationRecord,
    GeneratorConfig,
    build_generator,
    generate,
    log_record,
    read_records,
)
from .lattice import (
    LatticeMap,
    default_lattice_map,
    load_lattice_map,
    parse_values,
    random_solution,
    render_half_map,
    serialize,
    snap_to_grid,
)
from .models import DEFAULT_GRID, EvaluationResult, ParameterGrid, SolutionVector, StepOutcome, TrialReport
from .optimize import GaConfig, LoopConfig, RandomConfig, run_ga, run_opro, run_random_baseline
from .prompting import (
    ParseMode,
    PromptStrategy,
    SolutionArchive,
    archive_insert,
    build_meta_prompt,
    parse_response,
)
from .runner import SummaryStats, emit_markdown_tables, emit_progression_chart, run_trials
from .scoring import DEFAULT_SCORING, ScoreConfig, derive_weights, evaluate_and_score, format_score, score
from .utils.text import cleanup_llm_output

__all__ = [
    "serialize",
    "parse_values",
    "snap_to_grid",
    "random_solution",
    "render_half_map",
    "load_lattice_map",
    "default_lattice_map",
    "LatticeMap",
    "ParameterGrid",
    "DEFAULT_GRID",
    "SolutionVector",
    "EvaluationResult",
    "StepOutcome",
    "TrialReport",
    "score",
    "derive_weights",
    "evaluate_and_score",
    "format_score",
    "ScoreConfig",
    "DEFAULT_SCORING",
    "surrogate_evaluate",
    "external_evaluate",
    "build_evaluator",
    "SurrogateConfig",
    "SurrogateEvaluator",
    "ExternalEvaluator",
    "CachedEvaluator",
    "EvaluatorConfig",
    "archive_insert",
    "build_meta_prompt",
    "parse_response",
    "SolutionArchive",
    "PromptStrategy",
    "ParseMode",
    "generate",
    "log_record",
    "read_records",
    "build_generator",
    "GeneratorConfig",
    "GenerationRecord",
    "run_opro",
    "run_ga",
    "run_random_baseline",
    "LoopConfig",
    "GaConfig",
    "RandomConfig",
    "run_trials",
    "emit_markdown_tables",
    "emit_progression_chart",
    "SummaryStats",
    "RunConfig",
    "load_config",
    "cleanup_llm_output",
    "InvalidSolution",
    "LatticeMapError",
    "EvaluationError",
    "DegenerateSystem",
    "SpawnFailed",
    "EvaluatorTimeout",
    "ProtocolError",
    "EvaluatorReportedError",
    "EmptyArchive",
    "GenerationFailed",
    "TransportError",
    "AuthError",
    "ReplayExhausted",
    "ConfigError",
]
