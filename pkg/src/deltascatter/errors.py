"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input value violates a constructor or CLI contract."""


class DomainError(ValueError):
    """An argument lies outside a function's documented accuracy domain."""


class SingularityError(ArithmeticError):
    """An evaluation hit a genuine singularity and has no finite answer."""
