"""
k-subset construction for finite-word NFAs.

The subset construction with every tracked set capped at k states. When
Δ(X, a) has more than k elements, every size-k subset is offered as a
nondeterministic successor (lexicographic order of the sorted state lists).
"""

import itertools
import logging
from typing import List, Optional

from backend.core.determinize import explore, resolve_state_budget
from backend.core.models import Automaton, FiniteReach, SetState, WordMode

logger = logging.getLogger(__name__)


def capped_successors(target: frozenset, k: int) -> List[SetState]:
    """Δ(X, a) itself if it fits, otherwise all of its size-k subsets; [] for ∅"""
    if not target:
        return []
    if len(target) <= k:
        return [SetState.of(target)]
    return [SetState(combo) for combo in itertools.combinations(sorted(target), k)]


def check_bound(a: Automaton, k: int) -> None:
    if not 1 <= k <= a.state_count:
        raise ValueError(f"k must lie in [1, {a.state_count}], got {k}")


def k_subset(a: Automaton, k: int, state_budget: Optional[int] = None) -> Automaton:
    """
    Reachable part of A_k.

    Args:
        a: finite-word NFA with n states
        k: cap on the set size, 1 <= k <= n
        state_budget: guard on the number of materialised states

    Returns:
        NFA over SetState labels; a set is accepting iff it meets F
    """
    if a.word_mode != WordMode.FINITE:
        raise ValueError("k_subset requires a finite-word automaton")
    check_bound(a, k)

    def step(state: SetState, sym: int):
        return capped_successors(a.post(state.members, sym), k)

    labels, edges = explore(a.alphabet, SetState.of([a.initial]), step, resolve_state_budget(state_budget),
                            f"{k}-subset construction")
    accepting = frozenset(i for i, s in enumerate(labels) if a.accepting & s.as_set())
    logger.debug(f"{k}-subset construction: {a.state_count} -> {len(labels)} states")
    return Automaton.from_edges(a.alphabet, len(labels), 0, edges, FiniteReach(accepting), WordMode.FINITE, labels)
