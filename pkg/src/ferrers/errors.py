"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """An input exceeded a configured size, weight, or search budget."""


class SpliceError(ValueError):
    """Splicing was attempted at an index where the strict inequality fails."""


class TransformError(ValueError):
    """A corner transform did not produce a left-justified board."""
