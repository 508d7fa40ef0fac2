"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the range where an operation is defined."""


class DimensionError(DomainError):
    """Matrix or vector shapes do not fit together."""


class SizeError(DomainError):
    """Instance too large for an enumeration or symbolic routine."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
