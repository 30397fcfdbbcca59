from .config import ConfigError
from .evaluator import EvaluatorReportedError, EvaluatorTimeout, ProtocolError, SpawnFailed
from .generation import AuthError, GenerationFailed, ReplayExhausted, TransportError
from .lattice import InvalidSolution, LatticeMapError
from .prompting import EmptyArchive
from .scoring import DegenerateSystem, EvaluationError

__all__ = [
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
