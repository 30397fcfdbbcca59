class EmptyArchive(ValueError):
    """Raised when a meta-prompt is requested from an empty solution archive."""

    pass
