from .scoring import EvaluationError


class SpawnFailed(EvaluationError):
    """Raised when the external evaluator process cannot be started."""

    pass


class EvaluatorTimeout(EvaluationError, TimeoutError):
    """Raised when the external evaluator exceeds its time limit (process killed)."""

    pass


class ProtocolError(EvaluationError):
    """Raised when the evaluator's output is not the expected JSON object."""

    pass


class EvaluatorReportedError(EvaluationError):
    """Raised when the evaluator exits with a nonzero status."""

    def __init__(self, message: str, returncode: int, stderr: str = ""):
        super().__init__(message)
        self.returncode = returncode
        self.stderr = stderr
