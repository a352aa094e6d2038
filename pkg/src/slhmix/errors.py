"""Exception types shared across the package."""


class SlhmixError(Exception):
    """Base class for package errors."""


class GuardError(SlhmixError):
    """A size or memory guard was exceeded."""


class DomainError(SlhmixError):
    """An input violates a documented precondition."""


class DecompositionError(SlhmixError):
    """Internal inconsistency in a representation-theory decomposition."""


class ValidationError(SlhmixError):
    """A numerical validation check failed."""
