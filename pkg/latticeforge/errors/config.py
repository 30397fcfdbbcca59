class ConfigError(ValueError):
    """Raised for invalid or inconsistent run configuration."""

    pass
