class GenerationFailed(RuntimeError):
    """Raised when no candidate text could be obtained from the generator."""

    pass


class TransportError(GenerationFailed):
    """Raised after transport failures or retryable statuses exhaust all retries."""

    pass


class AuthError(GenerationFailed, PermissionError):
    """Raised on 401/403 responses; never retried."""

    pass


class ReplayExhausted(GenerationFailed):
    """Raised when a replay transcript has no responses left."""

    pass
