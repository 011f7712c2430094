"""Exception types shared across the package."""


class GLError(ValueError):
    """Base class for all errors raised by glacm."""


class DomainError(GLError):
    """An input lies outside the region where an operation is defined."""


class ContextError(GLError):
    """A value was used with weights it does not belong to."""


class UnsupportedInput(GLError):
    """The requested computation has no available formula for this input."""
