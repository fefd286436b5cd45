class ScaleGuardError(RuntimeError):
    """Requested work exceeds the configured desk-scale bounds."""
