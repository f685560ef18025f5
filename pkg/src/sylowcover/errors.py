"""Exception types shared across the package."""


class SylowCoverError(Exception):
    """Base class for all library errors."""


class DomainError(SylowCoverError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class NotPrimePower(DomainError):
    """A field size that is not of the form p^k."""


class ClosureBudgetExceeded(SylowCoverError, RuntimeError):
    """Group enumeration would exceed the configured element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeds the enumeration cap of {cap} elements")
        self.cap = cap


class HypothesisFailed(SylowCoverError):
    """A criterion was invoked on a group that does not satisfy its hypotheses."""
