"""
GFG Models

Letter-game strategies and prunings.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from backend.common.errors import StrategyError
from backend.core.models import Automaton
from backend.core.operations import is_deterministic, restrict

ChoicePoint = Tuple[int, int]


@dataclass
class LetterStrategy:
    """
    Positional Player-0 strategy of a letter game.

    ``moves[(q, d, sym)]`` is the successor of q chosen on ``sym`` when the
    referee is in state d (before reading ``sym``).
    """
    referee: Automaton
    moves: Dict[Tuple[int, int, int], int] = field(default_factory=dict)

    def move(self, q: int, d: int, sym: int) -> Optional[int]:
        return self.moves.get((q, d, sym))

    def __len__(self) -> int:
        return len(self.moves)

    def to_dict(self) -> Dict[str, Any]:
        """Konvertiert zu JSON-serialisierbarem Dict"""
        return {
            "referee_states": self.referee.state_count,
            "moves": [[q, d, sym, r] for (q, d, sym), r in sorted(self.moves.items())],
        }


def pruned_reachable(a: Automaton, choices: Dict[ChoicePoint, int]) -> Tuple[List[int], List[ChoicePoint]]:
    """
    Breadth-first reachability in ``a`` with the choice points overridden.

    Returns:
        (reachable states in BFS order, choice points met on the way, in
        the order they are met)
    """
    seen = {a.initial}
    order = [a.initial]
    met: List[ChoicePoint] = []
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for sym in a.alphabet.indices:
            targets = a.transitions[q][sym]
            if (q, sym) in choices:
                met.append((q, sym))
                targets = (choices[(q, sym)],)
            else:
                targets = sorted(targets)
            for r in targets:
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
    return order, met


@dataclass
class Pruning:
    """
    One retained successor per nondeterministic (state, symbol) choice point.

    Choice points that are unreachable in the pruned automaton may be left
    out; ``apply`` drops them together with the unreachable states.
    """
    choices: Dict[ChoicePoint, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.choices)

    def check(self, a: Automaton) -> None:
        for (q, sym), r in self.choices.items():
            if not 0 <= q < a.state_count or not 0 <= sym < len(a.alphabet):
                raise StrategyError(f"choice point ({q}, {sym}) outside the automaton")
            if r not in a.transitions[q][sym]:
                raise StrategyError(f"pruning keeps {q} -{a.alphabet[sym]}-> {r}, which is not a transition")

    def apply(self, a: Automaton) -> Automaton:
        """
        The pruned automaton restricted to its reachable states.

        Raises:
            StrategyError: a choice is not a transition, or a reachable
                choice point is left unresolved
        """
        self.check(a)
        order, _ = pruned_reachable(a, self.choices)
        keep = set(order)
        edges_kept = []
        for p in order:
            for sym in a.alphabet.indices:
                if (p, sym) in self.choices:
                    edges_kept.append((p, sym, self.choices[(p, sym)]))
                else:
                    edges_kept.extend((p, sym, q) for q in a.transitions[p][sym] if q in keep)
        pruned = Automaton.from_edges(a.alphabet, a.state_count, a.initial, edges_kept, a.acceptance,
                                      a.word_mode, a.labels, a.safety)
        result = restrict(pruned, order)
        if not is_deterministic(result):
            raise StrategyError("pruning leaves a reachable nondeterministic choice point")
        return result

    def render(self, a: Automaton) -> List[str]:
        """One ``p sym q`` line per retained choice"""
        return [f"{a.label(q)} {a.alphabet[sym]} {a.label(r)}" for (q, sym), r in sorted(self.choices.items())]

    def to_dict(self) -> Dict[str, Any]:
        """Konvertiert zu JSON-serialisierbarem Dict"""
        return {"choices": [[q, sym, r] for (q, sym), r in sorted(self.choices.items())]}
