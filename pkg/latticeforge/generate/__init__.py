from .base import CandidateGenerator, GenerationOutput
from .factory import Backend, GeneratorConfig, build_generator, generate
from .http import ChatCompletionGenerator
from .mock import MockMutatorGenerator
from .records import GenerationRecord, RunLog, log_record, read_records
from .replay import ReplayGenerator

__all__ = [
    "Backend",
    "CandidateGenerator",
    "ChatCompletionGenerator",
    "GenerationOutput",
    "GenerationRecord",
    "GeneratorConfig",
    "MockMutatorGenerator",
    "ReplayGenerator",
    "RunLog",
    "build_generator",
    "generate",
    "log_record",
    "read_records",
]
