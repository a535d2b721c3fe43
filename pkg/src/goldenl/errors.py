"""Shared exception types."""


class CapExceededError(RuntimeError):
    """An iteration or step cap was reached before the computation finished."""


class StructuralViolationError(RuntimeError):
    """An internal exactness invariant failed. Indicates a bug, not bad input."""


class VerticalDirectionError(ValueError):
    """Raised for slope-infinity directions, which no generator word produces."""
