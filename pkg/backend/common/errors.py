"""
Exception hierarchy shared by all backend modules.
"""

from typing import Any, Optional


class WidthkitError(Exception):
    """Base class for all widthkit errors"""


class AlphabetMismatchError(WidthkitError, ValueError):
    """Two automata combined by an operation use different alphabets"""

    def __init__(self, left, right):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(f"alphabet mismatch: {list(self.left)} vs {list(self.right)}")


class BudgetExceededError(WidthkitError):
    """
    A configured resource budget was exceeded.

    Attributes:
        what: name of the budget (e.g. "state_budget")
        budget: configured limit
        observed: value that crossed the limit
        partial: progress made before the refusal (operation specific)
    """

    def __init__(self, what: str, budget: int, observed: int, partial: Optional[Any] = None,
                 detail: str = ""):
        self.what = what
        self.budget = budget
        self.observed = observed
        self.partial = partial
        message = f"{what} exceeded: {observed} > {budget}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class FormatError(WidthkitError, ValueError):
    """Parse error in one of the text formats; line is 1-based"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class StrategyError(WidthkitError):
    """A strategy does not fit the arena or automaton it is applied to"""


class ConsistencyError(WidthkitError, AssertionError):
    """An internal cross-check between two independent computations failed"""
