"""
Game Engine Models

Finite two-player arenas with safety or parity winning conditions,
positional strategies and solutions.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple, Union

from backend.common.errors import BudgetExceededError, StrategyError


# ============================================================================
# Winning Conditions
# ============================================================================

@dataclass(frozen=True)
class Safety:
    """Player 0 wins iff no bad position is ever visited"""
    bad: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "bad", frozenset(self.bad))


@dataclass(frozen=True)
class Parity:
    """Max-even parity: Player 0 wins iff the maximal priority seen infinitely often is even"""
    priority: Tuple[int, ...]
    max_priority: int

    def __post_init__(self):
        object.__setattr__(self, "priority", tuple(self.priority))
        if self.priority and max(self.priority) > self.max_priority:
            raise ValueError(f"priority above declared maximum {self.max_priority}")
        if any(p < 0 for p in self.priority):
            raise ValueError("priorities must be natural numbers")


WinningCondition = Union[Safety, Parity]


# ============================================================================
# Arena
# ============================================================================

@dataclass(frozen=True, eq=False)
class GameArena:
    """
    Positions 0..n-1 with owners in {0, 1}, successor lists, an initial
    position and a winning condition. A position without successors is
    losing for its owner.
    """
    owners: Tuple[int, ...]
    successors: Tuple[Tuple[int, ...], ...]
    initial: int
    condition: WinningCondition
    labels: Tuple[Any, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "owners", tuple(self.owners))
        object.__setattr__(self, "successors", tuple(tuple(s) for s in self.successors))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.owners) != len(self.successors):
            raise ValueError("owners and successors must have the same length")
        if not 0 <= self.initial < max(len(self.owners), 1):
            raise ValueError(f"initial position out of range: {self.initial}")
        n = len(self.owners)
        for v, succ in enumerate(self.successors):
            for w in succ:
                if not 0 <= w < n:
                    raise ValueError(f"edge {v} -> {w} leaves the arena")
        if isinstance(self.condition, Parity) and len(self.condition.priority) != n:
            raise ValueError("one priority per position required")

    @property
    def size(self) -> int:
        return len(self.owners)

    @property
    def positions(self) -> range:
        return range(len(self.owners))

    @property
    def predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        cached = self.__dict__.get("_predecessors")
        if cached is None:
            preds: List[List[int]] = [[] for _ in self.positions]
            for v, succ in enumerate(self.successors):
                for w in succ:
                    preds[w].append(v)
            cached = tuple(tuple(p) for p in preds)
            object.__setattr__(self, "_predecessors", cached)
        return cached

    def index_of(self, label: Hashable) -> int:
        lookup = self.__dict__.get("_label_index")
        if lookup is None:
            lookup = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_label_index", lookup)
        return lookup[label]

    def is_bad(self, v: int) -> bool:
        return isinstance(self.condition, Safety) and v in self.condition.bad


def build_arena(
    initial: Hashable,
    owner: Callable[[Hashable], int],
    successors: Callable[[Hashable], Iterable[Hashable]],
    bad: Optional[Callable[[Hashable], bool]] = None,
    priority: Optional[Callable[[Hashable], int]] = None,
    max_priority: Optional[int] = None,
    arena_budget: Optional[int] = None,
    what: str = "arena",
) -> GameArena:
    """
    Materialise the positions reachable from ``initial``.

    Positions are numbered in BFS order; successor order follows the order
    returned by ``successors`` (duplicates dropped). Exactly one of ``bad``
    (safety) and ``priority`` (parity) must be given.
    """
    if (bad is None) == (priority is None):
        raise ValueError("build_arena needs exactly one of bad / priority")
    index: Dict[Hashable, int] = {initial: 0}
    labels: List[Hashable] = [initial]
    edges: List[Tuple[int, ...]] = []
    queue = deque([initial])
    while queue:
        label = queue.popleft()
        row: List[int] = []
        seen_row = set()
        for target in successors(label):
            if target not in index:
                index[target] = len(labels)
                labels.append(target)
                if arena_budget is not None and len(labels) > arena_budget:
                    raise BudgetExceededError("arena_budget", arena_budget, len(labels), detail=what)
                queue.append(target)
            t = index[target]
            if t not in seen_row:
                seen_row.add(t)
                row.append(t)
        edges.append(tuple(row))
    owners = tuple(owner(label) for label in labels)
    if bad is not None:
        condition: WinningCondition = Safety(frozenset(i for i, label in enumerate(labels) if bad(label)))
    else:
        priorities = tuple(priority(label) for label in labels)
        top = max_priority if max_priority is not None else max(priorities, default=0)
        condition = Parity(priorities, top)
    return GameArena(owners, tuple(edges), 0, condition, tuple(labels))


# ============================================================================
# Strategies and Solutions
# ============================================================================

@dataclass
class Strategy:
    """Positional strategy: owner's positions (in its winning region) -> chosen successor"""
    player: int
    choices: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, v: int) -> int:
        return self.choices[v]

    def __contains__(self, v: int) -> bool:
        return v in self.choices

    def __len__(self) -> int:
        return len(self.choices)

    def get(self, v: int, default: Optional[int] = None) -> Optional[int]:
        return self.choices.get(v, default)

    def check(self, arena: GameArena) -> None:
        """Raise StrategyError unless every choice is an edge from a position of ``player``"""
        for v, w in self.choices.items():
            if not 0 <= v < arena.size:
                raise StrategyError(f"strategy position {v} not in arena")
            if arena.owners[v] != self.player:
                raise StrategyError(f"position {v} is not owned by player {self.player}")
            if w not in arena.successors[v]:
                raise StrategyError(f"strategy move {v} -> {w} is not an edge")

    def to_dict(self) -> Dict:
        return {"player": self.player, "choices": {str(v): w for v, w in sorted(self.choices.items())}}


@dataclass
class GameSolution:
    """Winning regions of both players and positional strategies on them"""
    arena: GameArena
    regions: Tuple[FrozenSet[int], FrozenSet[int]]
    strategies: Tuple[Strategy, Strategy]

    @property
    def winner(self) -> int:
        """Winner from the initial position"""
        return 0 if self.arena.initial in self.regions[0] else 1

    def wins(self, player: int, v: int) -> bool:
        return v in self.regions[player]

    @property
    def winning_strategy(self) -> Strategy:
        return self.strategies[self.winner]
