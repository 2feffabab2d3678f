"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ResourceError(RuntimeError):
    """A configured size cap was exceeded."""
