class InternalConsistencyError(RuntimeError):
    """Two independent evaluations of the same quantity disagreed (a bug, not bad input)."""


class BudgetExceededError(ValueError):
    """A brute-force or dense computation was refused because it is too large."""
