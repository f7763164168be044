"""
Width Models

Dataclasses for width computations and their reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple


class WidthMethod(str, Enum):
    """How a width report was computed"""
    WIDTH_GAME = "width_game"            # safety game Gw(A, k)
    K_SUBSET_GFG = "k_subset_gfg"        # letter game on the k-subset construction
    K_BREAKPOINT_GFG = "k_breakpoint_gfg"  # parity letter game on the k-breakpoint construction


@dataclass
class KVerdict:
    """Outcome of one bound k"""
    k: int
    wins: bool
    arena_positions: int = 0
    construction_states: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"k": self.k, "wins": self.wins, "arena_positions": self.arena_positions}
        if self.construction_states is not None:
            data["construction_states"] = self.construction_states
        return data


@dataclass
class WidthReport:
    """
    Width of an automaton with the per-k evidence.

    ``width`` is None when no k up to ``max_k`` was winning; ``lower_bound``
    then tells how far the search got.
    """
    width: Optional[int]
    method: WidthMethod
    source_states: int
    verdicts: List[KVerdict] = field(default_factory=list)
    strategy: Optional[Dict[Tuple, Any]] = None

    @property
    def lower_bound(self) -> int:
        if self.width is not None:
            return self.width
        return max((v.k for v in self.verdicts), default=0) + 1

    def verdict(self, k: int) -> Optional[KVerdict]:
        return next((v for v in self.verdicts if v.k == k), None)

    def to_dict(self) -> Dict[str, Any]:
        """Konvertiert zu JSON-serialisierbarem Dict"""
        return {
            "width": self.width,
            "lower_bound": self.lower_bound,
            "method": self.method.value,
            "source_states": self.source_states,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "strategy_moves": len(self.strategy) if self.strategy is not None else 0,
        }
