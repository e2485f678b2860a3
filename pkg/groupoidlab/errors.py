"""Exception types for groupoidlab."""


class LabError(Exception):
    """Base exception for groupoidlab errors."""


class ConfigError(LabError):
    """Raised when configuration is invalid."""

    pass


class SpecError(ConfigError):
    """Raised when a groupoid spec fails to parse or validate.

    Attributes:
        errors: Located messages, one per problem found
    """

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class AssumptionViolationError(LabError):
    """Raised when a model violates a premise of a construction."""

    pass


class DomainError(LabError):
    """Raised when an operator lies outside the domain of a functional calculus."""

    pass


class DegenerateDecompositionError(LabError):
    """Raised when a polar decomposition is requested for a singular operator."""

    def __init__(self, message: str, smallest_singular_value: float):
        self.smallest_singular_value = smallest_singular_value
        super().__init__(f"{message} (smallest singular value {smallest_singular_value:.3e})")


class NonFaithfulWeightError(LabError):
    """Raised when a weight's Gram matrix is not Hermitian positive-definite."""

    pass


class ResourceLimitError(LabError):
    """Raised when an operator would exceed the configured dimension limit."""

    pass
