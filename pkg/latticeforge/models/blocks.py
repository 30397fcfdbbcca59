from dataclasses import dataclass
from typing import Optional


@dataclass
class Block:
    """Base block spans a region of the source text."""

    type: str
    content: str
    start: int
    end: int


@dataclass
class SolutionBlock(Block):
    """A `<sol> ... <\\sol>` region of an LLM response; `closed` is False for a missing closer."""

    closed: bool = True
    closer: Optional[str] = None
