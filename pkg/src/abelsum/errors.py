"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(DomainError):
    """A group, element or exclude-set string could not be parsed."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


class InvariantViolation(RuntimeError):
    """A mathematical invariant failed at runtime (implementation bug)."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed the configured budget."""
