"""Shared exception types."""


class ResourceCapError(Exception):
    """Raised when an operation would exceed its desk-scale size cap."""
