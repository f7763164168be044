"""Backend Common Package"""

from .errors import (
    AlphabetMismatchError,
    BudgetExceededError,
    ConsistencyError,
    FormatError,
    StrategyError,
    WidthkitError,
)

__version__ = "1.0.0"

__all__ = [
    "AlphabetMismatchError",
    "BudgetExceededError",
    "ConsistencyError",
    "FormatError",
    "StrategyError",
    "WidthkitError",
]
