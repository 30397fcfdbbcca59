class EvaluationError(RuntimeError):
    """Raised when a solution cannot be evaluated or scored."""

    pass


class DegenerateSystem(ValueError):
    """Raised when published pairs cannot determine the objective weights."""

    pass
