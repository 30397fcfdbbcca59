from .archive import DEFAULT_CAPACITY, SolutionArchive, archive_insert
from .builder import (
    MetaPrompt,
    PromptStrategy,
    build_meta_prompt,
    load_template,
    render_pair,
    render_solution,
)
from .parse import ParseMode, ParseResult, Reject, RejectReason, parse_response, scan_solution_blocks

__all__ = [
    "DEFAULT_CAPACITY",
    "SolutionArchive",
    "archive_insert",
    "MetaPrompt",
    "PromptStrategy",
    "build_meta_prompt",
    "load_template",
    "render_pair",
    "render_solution",
    "ParseMode",
    "ParseResult",
    "Reject",
    "RejectReason",
    "parse_response",
    "scan_solution_blocks",
]
