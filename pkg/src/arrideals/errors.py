"""Shared exception types."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; results cannot be trusted."""
