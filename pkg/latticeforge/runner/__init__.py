from .reports import (
    SummaryStats,
    combined_progression_svg,
    comparison_svg,
    emit_comparison_charts,
    emit_markdown_tables,
    emit_progression_chart,
    format_cell,
    load_reports,
    mean_progression,
    progression_csv,
    progression_svg,
    save_report,
    summarize,
    summarize_groups,
    write_reports,
)
from .trials import TrialsResult, run_dir_for, run_single, run_trials

__all__ = [
    "SummaryStats",
    "TrialsResult",
    "combined_progression_svg",
    "comparison_svg",
    "emit_comparison_charts",
    "emit_markdown_tables",
    "emit_progression_chart",
    "format_cell",
    "load_reports",
    "mean_progression",
    "progression_csv",
    "progression_svg",
    "run_dir_for",
    "run_single",
    "run_trials",
    "save_report",
    "summarize",
    "summarize_groups",
    "write_reports",
]
