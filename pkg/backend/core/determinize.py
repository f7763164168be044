"""
Classic determinisations and DFA minimisation.

All constructions materialise only the reachable part, breadth-first from
the initial state, so state numbering is the deterministic BFS order.
The empty set is never materialised: a missing transition stands for it.
"""

import logging
from collections import deque
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from backend.common.errors import BudgetExceededError

from .models import (
    Alphabet,
    Automaton,
    BreakpointState,
    CoBuchi,
    FiniteReach,
    SetState,
    WordMode,
)
from .operations import is_deterministic, reachable_states

logger = logging.getLogger(__name__)

Label = Hashable
StepFn = Callable[[Label, int], Iterable[Label]]


def explore(
    alphabet: Alphabet,
    initial: Label,
    step: StepFn,
    state_budget: Optional[int] = None,
    what: str = "construction",
) -> Tuple[List[Label], List[Tuple[int, int, int]]]:
    """
    Breadth-first materialisation of a state space given by labels.

    Args:
        alphabet: input alphabet
        initial: label of the initial state
        step: (label, symbol) -> successor labels, in the order they should be numbered
        state_budget: optional limit on the number of states
        what: name used in budget errors

    Returns:
        (labels in BFS order, edges as (source, symbol, target) index triples)
    """
    index: Dict[Label, int] = {initial: 0}
    labels: List[Label] = [initial]
    edges: List[Tuple[int, int, int]] = []
    queue = deque([initial])
    while queue:
        label = queue.popleft()
        source = index[label]
        for sym in alphabet.indices:
            for target in step(label, sym):
                if target not in index:
                    index[target] = len(labels)
                    labels.append(target)
                    if state_budget is not None and len(labels) > state_budget:
                        raise BudgetExceededError("state_budget", state_budget, len(labels), detail=what)
                    queue.append(target)
                edges.append((source, sym, index[target]))
    return labels, edges


def resolve_state_budget(state_budget: Optional[int]) -> int:
    """Explicit budget, or the active configuration's state_budget"""
    if state_budget is not None:
        return state_budget
    from config import current_budgets
    return current_budgets().state_budget


def subset_construction(a: Automaton, state_budget: Optional[int] = None) -> Automaton:
    """
    Reachable powerset DFA of a finite-word NFA.

    A set-state is accepting iff it meets F. The empty set is omitted,
    so the result may be partial.
    """
    if a.word_mode != WordMode.FINITE:
        raise ValueError("subset_construction requires a finite-word automaton")

    def step(state: SetState, sym: int):
        target = a.post(state.members, sym)
        return [SetState.of(target)] if target else []

    labels, edges = explore(a.alphabet, SetState.of([a.initial]), step, resolve_state_budget(state_budget),
                            "subset construction")
    accepting = frozenset(i for i, s in enumerate(labels) if a.accepting & s.as_set())
    logger.debug(f"subset construction: {a.state_count} -> {len(labels)} states")
    return Automaton.from_edges(a.alphabet, len(labels), 0, edges, FiniteReach(accepting), WordMode.FINITE, labels)


def breakpoint_determinize(a: Automaton, state_budget: Optional[int] = None) -> Automaton:
    """
    Breakpoint (Miyano–Hayashi) determinisation of a coBüchi NFA.

    (X, Y) with Y ≠ ∅ moves to (Δ(X), Δ(Y) ∩ F); (X, ∅) moves to
    (Δ(X), Δ(X)). Accepting states are those with Y ≠ ∅.
    """
    if not isinstance(a.acceptance, CoBuchi):
        raise ValueError("breakpoint_determinize requires a coBüchi automaton")
    accepting_states = a.accepting

    def step(state: BreakpointState, sym: int):
        x = a.post(state.x.members, sym)
        if not x:
            return []
        if state.y.members:
            y = a.post(state.y.members, sym) & accepting_states
        else:
            y = x
        return [BreakpointState(SetState.of(x), SetState.of(y))]

    start = SetState.of([a.initial])
    labels, edges = explore(a.alphabet, BreakpointState(start, start), step, resolve_state_budget(state_budget),
                            "breakpoint construction")
    accepting = frozenset(i for i, s in enumerate(labels) if s.y.members)
    logger.debug(f"breakpoint construction: {a.state_count} -> {len(labels)} states")
    return Automaton.from_edges(a.alphabet, len(labels), 0, edges, CoBuchi(accepting), WordMode.INFINITE, labels)


def minimize_dfa(a: Automaton) -> Automaton:
    """
    Minimal trim DFA of a (partial or complete) finite-word DFA.

    The input is completed with a rejecting sink internally, classes are
    refined until stable (Moore), and the dead class is dropped. States are
    numbered in BFS order from the initial class, so equal languages give
    identical outputs. An empty language yields one rejecting state.

    Labels of the result are the sorted tuples of input states in each class.
    """
    if a.word_mode != WordMode.FINITE:
        raise ValueError("minimize_dfa requires a finite-word automaton")
    if not is_deterministic(a):
        raise ValueError("minimize_dfa requires a deterministic automaton")

    states = reachable_states(a)
    sink = a.state_count
    nsym = len(a.alphabet)

    def delta(q: int, sym: int) -> int:
        if q == sink:
            return sink
        targets = a.transitions[q][sym]
        return next(iter(targets)) if targets else sink

    universe = states + [sink]
    block = {q: (1 if q != sink and q in a.accepting else 0) for q in universe}
    count = len(set(block.values()))
    while True:
        signatures: Dict[Tuple, int] = {}
        refined = {}
        for q in universe:
            signature = (block[q],) + tuple(block[delta(q, sym)] for sym in range(nsym))
            refined[q] = signatures.setdefault(signature, len(signatures))
        block = refined
        if len(signatures) == count:
            break
        count = len(signatures)

    # dead classes: cannot reach an accepting class
    successors: Dict[int, set] = {}
    for q in universe:
        successors.setdefault(block[q], set()).update(block[delta(q, sym)] for sym in range(nsym))
    live = {block[q] for q in states if q in a.accepting}
    changed = True
    while changed:
        changed = False
        for b, succ in successors.items():
            if b not in live and succ & live:
                live.add(b)
                changed = True

    start = block[a.initial]
    if start not in live:
        return Automaton.from_edges(a.alphabet, 1, 0, [], FiniteReach(frozenset()), WordMode.FINITE,
                                    labels=[tuple(sorted(states))])

    members: Dict[int, List[int]] = {}
    for q in states:
        members.setdefault(block[q], []).append(q)

    order = {start: 0}
    queue = deque([start])
    edges = []
    representative = {block[q]: q for q in reversed(universe)}
    while queue:
        b = queue.popleft()
        rep = representative[b]
        for sym in range(nsym):
            target = block[delta(rep, sym)]
            if target not in live:
                continue
            if target not in order:
                order[target] = len(order)
                queue.append(target)
            edges.append((order[b], sym, order[target]))

    by_index = sorted(order, key=order.__getitem__)
    accepting = frozenset(order[b] for b in by_index if representative[b] in a.accepting)
    labels = [tuple(sorted(members.get(b, []))) for b in by_index]
    return Automaton.from_edges(a.alphabet, len(by_index), 0, edges, FiniteReach(accepting), WordMode.FINITE, labels)


def dfa_equivalent(a: Automaton, b: Automaton) -> bool:
    """Language equality of two finite-word DFAs via their canonical minimal forms"""
    left, right = minimize_dfa(a), minimize_dfa(b)
    return (left.alphabet == right.alphabet
            and left.state_count == right.state_count
            and left.transitions == right.transitions
            and left.accepting == right.accepting)
