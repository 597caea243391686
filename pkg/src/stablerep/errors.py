"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range where an operation is defined."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""
