"""
Determinisability by Pruning (ω-automata)

A candidate pruning D of A is accepted iff L(A) ⊆ L(D) (the other
inclusion holds for every pruning). Inclusion is refuted by an accepting
lasso of A × dual(D):

- D coBüchi: the loop must meet a rejecting state of D
- D Büchi: the loop must avoid the accepting states of D
- D Rabin: every pair (G, B) becomes the Streett obligation
  "meet B or avoid G"

A missing transition of D moves the product to ⊥, which D rejects.
"""

import logging
from math import prod
from typing import Dict, Hashable, List, Optional, Set, Tuple

from backend.common.errors import BudgetExceededError, ConsistencyError
from backend.core.lasso import LoopCondition, find_lasso, loop_conditions
from backend.core.models import Automaton, Buchi, CoBuchi, Rabin, UPWord
from backend.core.operations import (
    deterministic_member_up,
    deterministic_step,
    is_deterministic,
    require_same_alphabet,
)

from .letter_game import gfg_check_nca
from .models import ChoicePoint, Pruning, pruned_reachable

logger = logging.getLogger(__name__)


# ============================================================================
# Inclusion in a deterministic automaton
# ============================================================================

def _dual_condition(d: Automaton) -> LoopCondition:
    """Loop condition on product nodes (p, r) under which D rejects"""
    acceptance = d.acceptance
    if isinstance(acceptance, CoBuchi):
        accepting = acceptance.accepting
        return LoopCondition(obligations=[(lambda v: v[1] is None or v[1] not in accepting, None)])
    if isinstance(acceptance, Buchi):
        accepting = acceptance.accepting
        return LoopCondition(allowed=lambda v: v[1] is None or v[1] not in accepting)
    if isinstance(acceptance, Rabin):
        obligations = []
        for pair in acceptance.pairs:
            obligations.append((
                lambda v, bad=pair.bad: v[1] is None or v[1] in bad,
                lambda v, good=pair.good: v[1] is not None and v[1] in good,
            ))
        return LoopCondition(obligations=obligations)
    raise ValueError(f"no dual condition for {d.kind.value} automata")


def find_inclusion_counterexample(
    a: Automaton,
    d: Automaton,
    node_budget: Optional[int] = None,
) -> Optional[UPWord]:
    """
    A word of L(a) \\ L(d), or None when L(a) ⊆ L(d).

    Args:
        a: nondeterministic ω-automaton (Büchi, coBüchi or Rabin)
        d: deterministic ω-automaton over the same alphabet
    """
    require_same_alphabet(a, d)
    if a.is_finite or d.is_finite:
        raise ValueError("inclusion by lasso search requires ω-automata")
    if not is_deterministic(d):
        raise ValueError("the right-hand automaton must be deterministic")

    def successors(node: Tuple[int, Optional[int]]):
        p, r = node
        moves: List[Tuple[int, Hashable]] = []
        for sym in a.alphabet.indices:
            r_next = deterministic_step(d, r, sym) if r is not None else None
            for p_next in sorted(a.transitions[p][sym]):
                moves.append((sym, (p_next, r_next)))
        return moves

    dual = _dual_condition(d)
    conditions = []
    for condition in loop_conditions(a.acceptance, project=lambda node: node[0]):
        conditions.append(LoopCondition(
            allowed=lambda v, left=condition.allowed: left(v) and dual.allowed(v),
            obligations=list(condition.obligations) + list(dual.obligations),
        ))
    lasso = find_lasso((a.initial, d.initial), successors, conditions, node_budget)
    return lasso.word if lasso is not None else None


def inclusion_nca_in_dca(a: Automaton, d: Automaton) -> bool:
    """L(a) ⊆ L(d) for a coBüchi NFA a and a deterministic coBüchi automaton d"""
    if not isinstance(a.acceptance, CoBuchi) or not isinstance(d.acceptance, CoBuchi):
        raise ValueError("inclusion_nca_in_dca requires coBüchi automata")
    return find_inclusion_counterexample(a, d) is None


# ============================================================================
# Pruning search
# ============================================================================

def _advance(digits: List[int], radices: List[int], position: int) -> bool:
    """Odometer step at ``position`` with every later digit reset; False when exhausted"""
    for j in range(position + 1, len(digits)):
        digits[j] = 0
    while position >= 0:
        digits[position] += 1
        if digits[position] < radices[position]:
            return True
        digits[position] = 0
        position -= 1
    return False


class PruningSearch:
    """
    Exhaustive search for a pruning D of an ω-automaton with L(D) = L(A).

    Choice points are ordered by (state, symbol) and their successors by
    index; candidates are visited lexicographically, so the first witness
    is the least one. Candidates that agree on the choice points reachable
    under them are decided once, and every counterexample found is kept to
    discard later candidates cheaply.
    """

    def __init__(self, a: Automaton, pruning_budget: Optional[int] = None):
        if a.is_finite:
            raise ValueError("use dbp_check_nfa for finite-word automata")
        if pruning_budget is None:
            from config import current_budgets
            pruning_budget = current_budgets().pruning_budget
        self.automaton = a
        self.points: List[ChoicePoint] = [
            (q, sym) for q in a.states for sym in a.alphabet.indices if len(a.transitions[q][sym]) > 1
        ]
        self.options: List[List[int]] = [sorted(a.transitions[q][sym]) for q, sym in self.points]
        self.candidates = prod(len(opts) for opts in self.options)
        if self.candidates > pruning_budget:
            raise BudgetExceededError("pruning_budget", pruning_budget, self.candidates,
                                      detail=f"{len(self.points)} choice points")
        self.counterexamples: List[UPWord] = []
        self.decided: Set[Tuple[Tuple[int, int], ...]] = set()
        self.checked = 0

    def _refuted_by_cache(self, d: Automaton) -> bool:
        return any(not deterministic_member_up(d, w) for w in self.counterexamples)

    def run(self) -> Optional[Pruning]:
        a = self.automaton
        if not self.points:
            return Pruning()
        position_of = {point: i for i, point in enumerate(self.points)}
        radices = [len(opts) for opts in self.options]
        digits = [0] * len(self.points)
        while True:
            choices: Dict[ChoicePoint, int] = {
                point: self.options[i][digits[i]] for i, point in enumerate(self.points)
            }
            _, met = pruned_reachable(a, choices)
            reached = sorted(position_of[point] for point in set(met))
            key = tuple((i, digits[i]) for i in reached)
            if key not in self.decided:
                self.decided.add(key)
                kept = Pruning({self.points[i]: choices[self.points[i]] for i in reached})
                if self._accepts(kept):
                    logger.debug(f"DBP witness after {self.checked} inclusion checks "
                                 f"({len(self.counterexamples)} cached counterexamples)")
                    return kept
            last = reached[-1] if reached else -1
            if not _advance(digits, radices, last):
                logger.debug(f"no DBP witness: {self.checked} inclusion checks, "
                             f"{len(self.decided)} distinct reachable prunings")
                return None

    def _accepts(self, pruning: Pruning) -> bool:
        d = pruning.apply(self.automaton)
        if self._refuted_by_cache(d):
            return False
        self.checked += 1
        word = find_inclusion_counterexample(self.automaton, d)
        if word is None:
            return True
        self.counterexamples.append(word)
        return False


def dbp_check_nca(
    a: Automaton,
    pruning_budget: Optional[int] = None,
    cross_check: bool = True,
) -> Tuple[bool, Optional[Pruning]]:
    """
    DBP check of a coBüchi NFA by pruning search.

    Args:
        a: coBüchi NFA
        pruning_budget: guard on the number of candidate prunings
        cross_check: confirm a positive verdict with the GFG letter game

    Raises:
        BudgetExceededError: too many candidate prunings
        ConsistencyError: a DBP automaton failed the GFG check
    """
    if not isinstance(a.acceptance, CoBuchi):
        raise ValueError("dbp_check_nca requires a coBüchi automaton")
    pruning = PruningSearch(a, pruning_budget).run()
    if pruning is None:
        return False, None
    if cross_check and not gfg_check_nca(a)[0]:
        raise ConsistencyError("automaton is determinisable by pruning but the GFG letter game rejects it")
    return True, pruning


def dbp_check_rabin(a: Automaton, pruning_budget: Optional[int] = None) -> Tuple[bool, Optional[Pruning]]:
    """DBP check of a Rabin NFA; candidates are refuted through the dual Streett obligations"""
    if not isinstance(a.acceptance, Rabin):
        raise ValueError("dbp_check_rabin requires a Rabin automaton")
    pruning = PruningSearch(a, pruning_budget).run()
    return (pruning is not None), pruning


def dbp_check_buchi(a: Automaton, pruning_budget: Optional[int] = None) -> Tuple[bool, Optional[Pruning]]:
    """DBP check of a Büchi NFA against deterministic Büchi prunings"""
    if not isinstance(a.acceptance, Buchi):
        raise ValueError("dbp_check_buchi requires a Büchi automaton")
    pruning = PruningSearch(a, pruning_budget).run()
    return (pruning is not None), pruning
