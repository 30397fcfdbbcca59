from .blocks import Block, SolutionBlock
from .results import EvaluationResult, StepOutcome, TrialReport
from .solution import DEFAULT_GRID, PARAMETER_NAMES, ParameterGrid, SolutionVector

__all__ = [
    "Block",
    "SolutionBlock",
    "EvaluationResult",
    "StepOutcome",
    "TrialReport",
    "ParameterGrid",
    "SolutionVector",
    "DEFAULT_GRID",
    "PARAMETER_NAMES",
]
