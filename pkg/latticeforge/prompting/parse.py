# latticeforge/prompting/parse.py
"""
Tolerant extraction of `<sol> v1,...,v15 <\\sol>` candidates from LLM replies.

Both `<\\sol>` and `</sol>` close a block. A truncated closer (`<\\sol` with no
`>`) still closes it; a block with no closer at all ends at the end of its line.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from ..lattice.grid import snap_to_grid, split_values
from ..models.blocks import SolutionBlock
from ..models.solution import DEFAULT_GRID, N_GENES, SERIAL_ORDER, ParameterGrid, SolutionVector
from ..utils.text import cleanup_llm_output

_OPEN_RE = re.compile(r"<\s*sol\s*>", re.IGNORECASE)
_CLOSE_RE = re.compile(r"<\s*[\\/]\s*sol\s*>?", re.IGNORECASE)


class ParseMode(str, Enum):
    STRICT = "strict"
    SNAP_TO_GRID = "snap"


class RejectReason(str, Enum):
    BAD_TOKEN_COUNT = "BadTokenCount"
    NON_NUMERIC = "NonNumeric"
    OUT_OF_BOUNDS = "OutOfBounds"
    OFF_GRID = "OffGrid"


@dataclass
class Reject:
    reason: RejectReason
    block: SolutionBlock
    detail: str = ""


@dataclass
class ParseResult:
    candidates: List[SolutionVector] = field(default_factory=list)
    rejects: List[Reject] = field(default_factory=list)


def scan_solution_blocks(text: str) -> List[SolutionBlock]:
    """All `<sol>` blocks in order of appearance, with spans into `text`."""
    blocks: List[SolutionBlock] = []
    openers = list(_OPEN_RE.finditer(text))
    for n, m in enumerate(openers):
        body_start = m.end()
        region_end = openers[n + 1].start() if n + 1 < len(openers) else len(text)
        closer = _CLOSE_RE.search(text, body_start, region_end)
        if closer:
            blocks.append(
                SolutionBlock(
                    type="sol",
                    content=text[body_start : closer.start()],
                    start=body_start,
                    end=closer.start(),
                    closed=True,
                    closer=closer.group(0),
                )
            )
            continue
        line_end = text.find("\n", body_start, region_end)
        end = region_end if line_end == -1 else line_end
        blocks.append(
            SolutionBlock(type="sol", content=text[body_start:end], start=body_start, end=end, closed=False)
        )
    return blocks


def _classify(
    block: SolutionBlock, grid: ParameterGrid, mode: ParseMode
) -> "SolutionVector | Reject":
    tokens = split_values(block.content)
    if len(tokens) != N_GENES:
        return Reject(RejectReason.BAD_TOKEN_COUNT, block, f"{len(tokens)} values, expected {N_GENES}")
    values: List[float] = []
    for tok in tokens:
        try:
            v = float(tok)
        except ValueError:
            return Reject(RejectReason.NON_NUMERIC, block, f"not a number: {tok!r}")
        if not math.isfinite(v):
            return Reject(RejectReason.NON_NUMERIC, block, f"not finite: {tok!r}")
        values.append(v)

    if mode is ParseMode.SNAP_TO_GRID:
        return snap_to_grid(values, grid)

    for (kind, _), v in zip(SERIAL_ORDER, values):
        if not grid.in_bounds(kind, v):
            return Reject(RejectReason.OUT_OF_BOUNDS, block, f"{kind} value {v} outside bounds")
    for (kind, _), v in zip(SERIAL_ORDER, values):
        if not grid.on_grid(kind, v):
            return Reject(RejectReason.OFF_GRID, block, f"{kind} value {v} is not a grid step")
    return SolutionVector.from_values(values)


def parse_response(
    text: Optional[str],
    grid: ParameterGrid = DEFAULT_GRID,
    mode: ParseMode = ParseMode.SNAP_TO_GRID,
) -> ParseResult:
    """Candidates and rejects found in a reply. Never raises on content."""
    result = ParseResult()
    for block in scan_solution_blocks(cleanup_llm_output(text or "")):
        outcome = _classify(block, grid, mode)
        if isinstance(outcome, Reject):
            result.rejects.append(outcome)
        else:
            result.candidates.append(outcome)
    return result
