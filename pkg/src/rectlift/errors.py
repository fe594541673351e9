"""Exception types shared across the package."""


class RankMismatchError(ValueError):
    """Two objects living in root systems of different rank were combined."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class EnumerationBoundError(ValueError):
    """An exhaustive enumeration was requested beyond the configured limit."""
