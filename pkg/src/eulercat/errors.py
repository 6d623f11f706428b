"""Shared exception types."""


class ScaleCapError(Exception):
    """An exhaustive enumeration was refused because it exceeds the configured cap."""
