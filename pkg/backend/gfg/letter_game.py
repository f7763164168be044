"""
Letter Games

GFG checking by a game between a letter-picking Player 1 and a
transition-picking Player 0, judged by a deterministic referee for the
language of the automaton.

Features:
- Finite words: safety game, a position (q, d) reached after Player 0's
  reply is bad iff the referee accepts and q is rejecting
- coBüchi: three-priority parity game (referee rejecting: 2, token
  rejecting: 1, else 0)
- Winning strategies extracted as (q, d, letter) -> q'
- prune_to_dfa turns a winning finite-word strategy into an equivalent DFA
"""

import logging
from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from backend.common.errors import ConsistencyError, StrategyError
from backend.core.determinize import breakpoint_determinize, dfa_equivalent, subset_construction
from backend.core.models import Automaton, CoBuchi
from backend.core.operations import (
    coreachable_states,
    deterministic_step,
    is_deterministic,
    reachable_states,
    require_same_alphabet,
    restrict,
    trim,
)
from backend.games.models import GameArena, GameSolution, build_arena
from backend.games.solvers import solve

from .models import LetterStrategy, Pruning

logger = logging.getLogger(__name__)

WIN = ("WIN",)


# ============================================================================
# Referees
# ============================================================================

def live_cobuchi_referee(d: Automaton) -> Automaton:
    """
    Restrict a deterministic coBüchi automaton to the states with a
    non-empty residual (those that can reach a cycle of accepting states).
    The initial state is always kept.
    """
    graph = nx.DiGraph()
    accepting = d.accepting
    graph.add_nodes_from(accepting)
    for p, _sym, q in d.edges():
        if p in accepting and q in accepting:
            graph.add_edge(p, q)
    cores = set()
    for scc in nx.strongly_connected_components(graph):
        if len(scc) > 1 or any(graph.has_edge(q, q) for q in scc):
            cores |= scc
    live = coreachable_states(d, cores)
    keep = [q for q in reachable_states(d) if q in live or q == d.initial]
    return restrict(d, keep)


def default_letter_referee(a: Automaton, state_budget: Optional[int] = None) -> Automaton:
    """Trimmed subset construction (finite words) or live breakpoint automaton (coBüchi)"""
    if a.is_finite:
        return trim(subset_construction(a, state_budget))
    if isinstance(a.acceptance, CoBuchi):
        return live_cobuchi_referee(breakpoint_determinize(a, state_budget))
    raise ValueError(f"no letter game for {a.kind.value} automata")


# ============================================================================
# Game
# ============================================================================

class LetterGame:
    """
    Letter game of a finite-word NFA or a coBüchi NFA.

    Player-1 positions ("P1", q, d), Player-0 positions ("P0", q, d, a)
    where d is the referee state before a. Letters the referee cannot read
    lead to WIN (no accepted continuation exists).
    """

    def __init__(
        self,
        a: Automaton,
        referee: Optional[Automaton] = None,
        arena_budget: Optional[int] = None,
        state_budget: Optional[int] = None,
    ):
        if not a.is_finite and not isinstance(a.acceptance, CoBuchi):
            raise ValueError("letter games are defined for finite-word and coBüchi automata")
        if referee is None:
            referee = default_letter_referee(a, state_budget)
        else:
            require_same_alphabet(a, referee)
            if not is_deterministic(referee):
                raise ValueError("the referee must be deterministic")
        if arena_budget is None:
            from config import current_budgets
            arena_budget = current_budgets().arena_budget

        self.automaton = a
        self.referee = referee
        self.arena_budget = arena_budget
        self.parity = not a.is_finite
        self._arena: Optional[GameArena] = None
        self._solution: Optional[GameSolution] = None

    @property
    def initial(self) -> Hashable:
        return ("P1", self.automaton.initial, self.referee.initial)

    @staticmethod
    def _owner(label: Hashable) -> int:
        return 0 if label[0] == "P0" else 1

    def _successors(self, label: Hashable) -> Iterable[Hashable]:
        if label == WIN:
            return [WIN]
        if label[0] == "P1":
            _, q, d = label
            moves: List[Hashable] = []
            for sym in self.automaton.alphabet.indices:
                if deterministic_step(self.referee, d, sym) is None:
                    moves.append(WIN)
                else:
                    moves.append(("P0", q, d, sym))
            return moves
        _, q, d, sym = label
        d_next = deterministic_step(self.referee, d, sym)
        return [("P1", r, d_next) for r in sorted(self.automaton.transitions[q][sym])]

    def _bad(self, label: Hashable) -> bool:
        if label[0] != "P1":
            return False
        _, q, d = label
        return d in self.referee.accepting and q not in self.automaton.accepting

    def _priority(self, label: Hashable) -> int:
        if label[0] != "P1":
            return 0
        _, q, d = label
        if d not in self.referee.accepting:
            return 2
        return 1 if q not in self.automaton.accepting else 0

    @property
    def arena(self) -> GameArena:
        if self._arena is None:
            if self.parity:
                self._arena = build_arena(self.initial, self._owner, self._successors,
                                          priority=self._priority, max_priority=2,
                                          arena_budget=self.arena_budget, what="coBüchi letter game")
            else:
                self._arena = build_arena(self.initial, self._owner, self._successors, bad=self._bad,
                                          arena_budget=self.arena_budget, what="letter game")
            logger.debug(f"letter game: {self.automaton.state_count} states x "
                         f"{self.referee.state_count} referee states -> {self._arena.size} positions")
        return self._arena

    def solve(self) -> GameSolution:
        if self._solution is None:
            self._solution = solve(self.arena)
        return self._solution

    @property
    def player0_wins(self) -> bool:
        return self.solve().winner == 0

    def strategy(self) -> LetterStrategy:
        """Player 0's positional moves on her winning region"""
        arena = self.arena
        moves: Dict[Tuple[int, int, int], int] = {}
        for v, w in self.solve().strategies[0].choices.items():
            _, q, d, sym = arena.labels[v]
            moves[(q, d, sym)] = arena.labels[w][1]
        return LetterStrategy(self.referee, moves)


def gfg_check_nfa(a: Automaton, referee: Optional[Automaton] = None) -> Tuple[bool, Optional[LetterStrategy]]:
    """
    GFG check of a finite-word NFA.

    Returns:
        (verdict, winning letter-game strategy or None)
    """
    if not a.is_finite:
        raise ValueError("gfg_check_nfa requires a finite-word automaton")
    game = LetterGame(a, referee)
    if not game.player0_wins:
        return False, None
    return True, game.strategy()


def gfg_check_nca(a: Automaton, referee: Optional[Automaton] = None) -> Tuple[bool, Optional[LetterStrategy]]:
    """
    GFG check of a coBüchi NFA via the parity letter game.

    Player 0 wins iff the referee rejects or the token run eventually
    stays in F.
    """
    if not isinstance(a.acceptance, CoBuchi):
        raise ValueError("gfg_check_nca requires a coBüchi automaton")
    game = LetterGame(a, referee)
    if not game.player0_wins:
        return False, None
    return True, game.strategy()


# ============================================================================
# Pruning a finite-word strategy
# ============================================================================

def _live_pairs(a: Automaton, strategy: LetterStrategy) -> Dict[int, int]:
    """First referee state met with every state of a along the strategy's plays"""
    referee = strategy.referee
    first: Dict[int, int] = {a.initial: referee.initial}
    queue = deque([(a.initial, referee.initial)])
    seen = {(a.initial, referee.initial)}
    while queue:
        q, d = queue.popleft()
        for sym in a.alphabet.indices:
            d_next = deterministic_step(referee, d, sym)
            if d_next is None:
                continue
            r = strategy.move(q, d, sym)
            if r is None:
                raise StrategyError(f"strategy has no move at state {a.label(q)}, "
                                    f"referee {d}, letter {a.alphabet[sym]}")
            if r not in a.transitions[q][sym]:
                raise StrategyError(f"strategy move {a.label(q)} -{a.alphabet[sym]}-> {a.label(r)} "
                                    f"is not a transition")
            first.setdefault(r, d_next)
            if (r, d_next) not in seen:
                seen.add((r, d_next))
                queue.append((r, d_next))
    return first


def strategy_pruning(a: Automaton, strategy: LetterStrategy) -> Pruning:
    """
    Pruning that keeps, for every state q, the strategy's choice at the
    first play position (q, d) that reaches q. Letters the referee cannot
    read from d keep the least successor.
    """
    first = _live_pairs(a, strategy)
    referee = strategy.referee
    choices: Dict[Tuple[int, int], int] = {}
    seen = {a.initial}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        d = first.get(q)
        for sym in a.alphabet.indices:
            targets = sorted(a.transitions[q][sym])
            if not targets:
                continue
            r = targets[0]
            if d is not None and deterministic_step(referee, d, sym) is not None:
                r = strategy.move(q, d, sym)
            if len(targets) > 1:
                choices[(q, sym)] = r
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return Pruning(choices)


def prune_to_dfa(a: Automaton, strategy: LetterStrategy) -> Automaton:
    """
    Deterministic automaton obtained from ``a`` by keeping the strategy's
    transitions.

    Raises:
        StrategyError: the strategy does not fit the automaton
        ConsistencyError: the pruned automaton changed the language
    """
    if not a.is_finite:
        raise ValueError("prune_to_dfa requires a finite-word automaton")
    require_same_alphabet(a, strategy.referee)
    dfa = strategy_pruning(a, strategy).apply(a)
    if not dfa_equivalent(dfa, strategy.referee):
        raise ConsistencyError("pruned automaton is not equivalent to its source")
    logger.debug(f"pruned {a.state_count} states to a {dfa.state_count}-state DFA")
    return dfa


def dbp_check_nfa(a: Automaton) -> Tuple[bool, Optional[Pruning]]:
    """
    DBP check of a finite-word NFA: identical to the GFG check, the pruning
    derived from the winning strategy.
    """
    verdict, strategy = gfg_check_nfa(a)
    if not verdict:
        return False, None
    pruning = strategy_pruning(a, strategy)
    prune_to_dfa(a, strategy)
    return True, pruning
