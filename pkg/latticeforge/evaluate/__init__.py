from .base import Evaluator
from .cache import CachedEvaluator
from .external import ExternalEvaluator, decode_response, encode_request, external_evaluate
from .factory import EvaluatorConfig, build_evaluator
from .surrogate import SurrogateConfig, SurrogateEvaluator, surrogate_evaluate

__all__ = [
    "Evaluator",
    "CachedEvaluator",
    "ExternalEvaluator",
    "external_evaluate",
    "encode_request",
    "decode_response",
    "EvaluatorConfig",
    "build_evaluator",
    "SurrogateConfig",
    "SurrogateEvaluator",
    "surrogate_evaluate",
]
