"""
Multipebble Simulation

Safety game for A ⊑_k B: Spoiler moves one pebble through A, Duplicator
answers with at most k pebbles on B.

- Spoiler positions ("S", p, X): Spoiler picks a transition p -a-> p'
- Duplicator positions ("D", p', X, a): Duplicator picks X' ⊆ Δ_B(X, a)
- ("S", p, X) is bad iff p ∈ F_A and X ∩ F_B = ∅

A Spoiler without transitions loses. Configurations holding an accepting
universal sink of B are won by Duplicator outright.
"""

import logging
from typing import Hashable, Iterable, List, Optional

from backend.common.errors import ConsistencyError
from backend.core.determinize import subset_construction
from backend.core.models import Automaton
from backend.core.operations import accepting_sinks, is_universal, require_same_alphabet, trivial_universal
from backend.games.models import GameArena, GameSolution, build_arena
from backend.games.solvers import solve_safety
from backend.width.manager import width_nfa
from backend.width.pebbles import config_moves, holds_sink, initial_config

logger = logging.getLogger(__name__)

WIN = ("WIN",)


class SimulationGame:
    """
    Arena of the k-pebble simulation game between two finite-word automata.

    Args:
        a: Spoiler's automaton
        b: Duplicator's automaton
        k: number of Duplicator pebbles
        no_duplication: pebbles move individually and never split
        dominance: offer only undominated Duplicator moves
        arena_budget: guard on the number of arena positions
    """

    def __init__(
        self,
        a: Automaton,
        b: Automaton,
        k: int,
        no_duplication: bool = False,
        dominance: bool = False,
        arena_budget: Optional[int] = None,
    ):
        require_same_alphabet(a, b)
        if not a.is_finite or not b.is_finite:
            raise ValueError("multipebble simulation is defined for finite-word automata")
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        if arena_budget is None:
            from config import current_budgets
            arena_budget = current_budgets().arena_budget
        self.a = a
        self.b = b
        self.k = k
        self.no_duplication = no_duplication
        self.dominance = dominance
        self.arena_budget = arena_budget
        self.sinks = accepting_sinks(b)
        self._arena: Optional[GameArena] = None
        self._solution: Optional[GameSolution] = None

    def _spoiler(self, p: int, config) -> Hashable:
        if holds_sink(config, self.sinks):
            return WIN
        return ("S", p, config)

    @property
    def initial(self) -> Hashable:
        return self._spoiler(self.a.initial, initial_config(self.b.initial, self.k, self.no_duplication))

    @staticmethod
    def _owner(label: Hashable) -> int:
        return 0 if label[0] == "D" else 1

    def _successors(self, label: Hashable) -> Iterable[Hashable]:
        if label == WIN:
            return [WIN]
        if label[0] == "S":
            _, p, config = label
            moves: List[Hashable] = []
            for sym in self.a.alphabet.indices:
                moves.extend(("D", r, config, sym) for r in sorted(self.a.transitions[p][sym]))
            return moves
        _, p, config, sym = label
        return [
            self._spoiler(p, target)
            for target in config_moves(self.b, config, sym, self.k, self.no_duplication, self.dominance)
        ]

    def _bad(self, label: Hashable) -> bool:
        if label[0] != "S":
            return False
        _, p, config = label
        return p in self.a.accepting and not any(q in self.b.accepting for q in config)

    @property
    def arena(self) -> GameArena:
        if self._arena is None:
            self._arena = build_arena(self.initial, self._owner, self._successors, bad=self._bad,
                                      arena_budget=self.arena_budget, what=f"simulation game k={self.k}")
            logger.debug(f"simulation game k={self.k}: {self._arena.size} positions")
        return self._arena

    def solve(self) -> GameSolution:
        if self._solution is None:
            self._solution = solve_safety(self.arena)
        return self._solution

    @property
    def duplicator_wins(self) -> bool:
        return self.solve().winner == 0


def decide_sim(
    a: Automaton,
    b: Automaton,
    k: int,
    no_duplication: bool = False,
    dominance: bool = False,
    arena_budget: Optional[int] = None,
) -> bool:
    """A ⊑_k B: Duplicator wins the k-pebble simulation game"""
    return SimulationGame(a, b, k, no_duplication, dominance, arena_budget).duplicator_wins


def inclusion_via_width(a: Automaton, b: Automaton) -> bool:
    """L(a) ⊆ L(b) decided as a ⊑_k b with k = width(b)"""
    require_same_alphabet(a, b)
    k = width_nfa(b).width
    logger.debug(f"inclusion via {k}-pebble simulation")
    return decide_sim(a, b, k)


def width_via_sim(a: Automaton, k: int, no_duplication: bool = False) -> bool:
    """
    width(a) <= k decided as det(a) ⊑_k a.

    For universal a the one-state universal automaton is used as Spoiler
    as well and both verdicts must agree.

    Raises:
        ConsistencyError: the two Spoiler automata disagree
    """
    verdict = decide_sim(subset_construction(a), a, k, no_duplication)
    if is_universal(a):
        trivial = decide_sim(trivial_universal(a.alphabet), a, k, no_duplication)
        if trivial != verdict:
            raise ConsistencyError(f"simulation by the trivial automaton gives {trivial}, "
                                   f"by the determinisation {verdict} (k={k})")
    return verdict
