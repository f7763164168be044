"""
Width Game

The game Gw(A, k) on finite words as a safety arena:

- Player 1 positions ("P1", X, d): pebble configuration X, referee state d.
  Player 1 picks a letter.
- Player 0 positions ("P0", X, d, a): Player 0 answers with a configuration
  inside Δ(X, a) holding at most k states (or k pebbles).
- A Player-1 position is bad iff the referee accepts the word read so far
  and no pebble sits on an accepting state.

The referee is a deterministic automaton for L(A), by default the trimmed
subset construction, so every referee state still has an accepted
continuation. A letter on which the referee is undefined leaves no
obligation and leads to the Player-0 winning position WIN; so does any
configuration holding an accepting universal sink of A.
"""

import logging
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from backend.core.determinize import subset_construction
from backend.core.models import Automaton
from backend.core.operations import (
    accepting_sinks,
    deterministic_step,
    is_deterministic,
    require_same_alphabet,
    trim,
)
from backend.games.models import GameArena, GameSolution, build_arena
from backend.games.solvers import solve_safety

from .pebbles import Config, config_moves, holds_sink, initial_config

logger = logging.getLogger(__name__)

WIN = ("WIN",)

PebbleStrategy = Dict[Tuple[Config, int, int], Config]


def default_referee(a: Automaton, state_budget: Optional[int] = None) -> Automaton:
    """Trimmed subset construction: a DFA for L(a) whose states all have non-empty residuals"""
    return trim(subset_construction(a, state_budget))


class WidthGame:
    """
    Safety arena of Gw(A, k).

    Args:
        a: finite-word NFA
        k: number of pebbles / maximal configuration size
        no_duplication: k distinct pebbles instead of sets of size <= k
        referee: DFA for L(a) (default: trimmed subset construction)
        dominance: offer only undominated Player-0 moves
        arena_budget: guard on the number of arena positions
    """

    def __init__(
        self,
        a: Automaton,
        k: int,
        no_duplication: bool = False,
        referee: Optional[Automaton] = None,
        dominance: bool = False,
        arena_budget: Optional[int] = None,
        state_budget: Optional[int] = None,
    ):
        if not a.is_finite:
            raise ValueError("the width game requires a finite-word automaton")
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        if referee is None:
            referee = default_referee(a, state_budget)
        else:
            require_same_alphabet(a, referee)
            if not is_deterministic(referee):
                raise ValueError("the referee must be deterministic")
        if arena_budget is None:
            from config import current_budgets
            arena_budget = current_budgets().arena_budget

        self.automaton = a
        self.k = k
        self.no_duplication = no_duplication
        self.referee = referee
        self.dominance = dominance
        self.arena_budget = arena_budget
        self.sinks = accepting_sinks(a)
        self._arena: Optional[GameArena] = None
        self._solution: Optional[GameSolution] = None

    # ---- Positions ----

    def _player1(self, config: Config, d: int) -> Hashable:
        if holds_sink(config, self.sinks):
            return WIN
        return ("P1", config, d)

    @property
    def initial(self) -> Hashable:
        return self._player1(initial_config(self.automaton.initial, self.k, self.no_duplication),
                             self.referee.initial)

    @staticmethod
    def _owner(label: Hashable) -> int:
        return 0 if label[0] == "P0" else 1

    def _successors(self, label: Hashable) -> Iterable[Hashable]:
        if label == WIN:
            return [WIN]
        if label[0] == "P1":
            _, config, d = label
            moves: List[Hashable] = []
            for sym in self.automaton.alphabet.indices:
                if deterministic_step(self.referee, d, sym) is None:
                    moves.append(WIN)
                else:
                    moves.append(("P0", config, d, sym))
            return moves
        _, config, d, sym = label
        d_next = deterministic_step(self.referee, d, sym)
        return [
            self._player1(target, d_next)
            for target in config_moves(self.automaton, config, sym, self.k, self.no_duplication, self.dominance)
        ]

    def _bad(self, label: Hashable) -> bool:
        if label[0] != "P1":
            return False
        _, config, d = label
        return d in self.referee.accepting and not any(q in self.automaton.accepting for q in config)

    # ---- Arena and solution ----

    @property
    def arena(self) -> GameArena:
        if self._arena is None:
            self._arena = build_arena(
                self.initial, self._owner, self._successors, bad=self._bad,
                arena_budget=self.arena_budget, what=f"width game k={self.k}",
            )
            logger.debug(f"width game k={self.k}: {self._arena.size} positions "
                         f"({'pebbles' if self.no_duplication else 'subsets'})")
        return self._arena

    def solve(self) -> GameSolution:
        if self._solution is None:
            self._solution = solve_safety(self.arena)
        return self._solution

    @property
    def player0_wins(self) -> bool:
        return self.solve().winner == 0

    def pebble_strategy(self) -> PebbleStrategy:
        """Player 0's winning moves as (X, d, letter) -> X'"""
        solution = self.solve()
        arena = self.arena
        moves: PebbleStrategy = {}
        for v, w in solution.strategies[0].choices.items():
            _, config, d, sym = arena.labels[v]
            target = arena.labels[w]
            if target == WIN:
                # the chosen configuration held a universal sink
                target = next(
                    c for c in config_moves(self.automaton, config, sym, self.k, self.no_duplication, self.dominance)
                    if holds_sink(c, self.sinks)
                )
            else:
                target = target[1]
            moves[(config, d, sym)] = target
        return moves


def width_le(
    a: Automaton,
    k: int,
    no_duplication: bool = False,
    referee: Optional[Automaton] = None,
    dominance: bool = False,
    arena_budget: Optional[int] = None,
) -> Tuple[bool, Optional[PebbleStrategy]]:
    """
    Decide width(a) <= k.

    Returns:
        (verdict, Player 0's winning pebble strategy or None)
    """
    game = WidthGame(a, k, no_duplication, referee, dominance, arena_budget)
    if not game.player0_wins:
        return False, None
    return True, game.pebble_strategy()
