"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """An argument violates an operation's precondition."""


class NotInCatalog(KeyError):
    """A pattern or generating-function id has no catalogued formula."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class NotExpandable(ArithmeticError):
    """A rational function whose denominator has no unit constant term."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
