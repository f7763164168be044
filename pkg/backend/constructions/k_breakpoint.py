"""
k-breakpoint construction for coBüchi NFAs.

States are pairs (X, Y) with Y ⊆ X and |X| <= k. Y follows the runs that
stayed inside F since the last breakpoint (Y = ∅); a run of the
construction accepts iff it meets breakpoints finitely often.
"""

import logging
from typing import Optional

from backend.core.determinize import explore, resolve_state_budget
from backend.core.models import Automaton, BreakpointState, CoBuchi, SetState, WordMode

from .k_subset import capped_successors, check_bound

logger = logging.getLogger(__name__)


def k_breakpoint(a: Automaton, k: int, state_budget: Optional[int] = None) -> Automaton:
    """
    Reachable part of the k-breakpoint NCA, initial state ({q0}, {q0}).

    Successors of (X, Y) on a, with D = Δ(X, a):
        Y = ∅, |D| <= k:  (D, D)
        Y = ∅, |D| > k:   (X', X') for every size-k X' ⊆ D
        Y ≠ ∅, |D| <= k:  (D, Δ(Y, a) ∩ F)
        Y ≠ ∅, |D| > k:   (X', X' ∩ Δ(Y, a) ∩ F) for every size-k X' ⊆ D
    """
    if not isinstance(a.acceptance, CoBuchi):
        raise ValueError("k_breakpoint requires a coBüchi automaton")
    check_bound(a, k)
    accepting_states = a.accepting

    def step(state: BreakpointState, sym: int):
        choices = capped_successors(a.post(state.x.members, sym), k)
        if not state.y.members:
            return [BreakpointState(x, x) for x in choices]
        surviving = a.post(state.y.members, sym) & accepting_states
        return [BreakpointState(x, SetState.of(surviving & x.as_set())) for x in choices]

    start = SetState.of([a.initial])
    labels, edges = explore(a.alphabet, BreakpointState(start, start), step, resolve_state_budget(state_budget),
                            f"{k}-breakpoint construction")
    accepting = frozenset(i for i, s in enumerate(labels) if s.y.members)
    logger.debug(f"{k}-breakpoint construction: {a.state_count} -> {len(labels)} states")
    return Automaton.from_edges(a.alphabet, len(labels), 0, edges, CoBuchi(accepting), WordMode.INFINITE, labels)
