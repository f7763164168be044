"""
Solver for the formula game G_c.

Positions (τ, α): the owner τ rewrites the variables of X_τ and sets t to
τ. A move that falsifies φ loses immediately for the mover. Player 0
wins iff she can avoid ever losing, so the game is a safety game for
Player 0 with the single bad terminal LOSE0.
"""

import itertools
import logging
from typing import Dict, Hashable, List, Optional, Tuple

from backend.common.errors import BudgetExceededError
from backend.games.models import build_arena
from backend.games.solvers import solve_safety

from .models import TURN_VARIABLE, GcInstance, Valuation

logger = logging.getLogger(__name__)

LOSE = {0: ("LOSE", 0), 1: ("LOSE", 1)}

GcStrategy = Dict[Tuple[int, Valuation], Valuation]


def gc_moves(instance: GcInstance, player: int, alpha: Valuation) -> List[Valuation]:
    """All valuations the owner of (player, alpha) can produce, in lexicographic order"""
    owned = [instance.index(v) for v in instance.owned(player)]
    turn = instance.index(TURN_VARIABLE)
    results: List[Valuation] = []
    for values in itertools.product((False, True), repeat=len(owned)):
        updated = list(alpha)
        for i, value in zip(owned, values):
            updated[i] = value
        updated[turn] = bool(player)
        results.append(tuple(updated))
    return results


def solve_gc(instance: GcInstance, max_vars: Optional[int] = None) -> Tuple[int, GcStrategy]:
    """
    Winner of G_c from (1, α_init).

    Returns:
        (winner, the winner's positional strategy (τ, α) -> α' on its
        winning positions)

    Raises:
        BudgetExceededError: |V| above ``max_vars`` (default gc_max_vars)
    """
    if max_vars is None:
        from config import current_budgets
        max_vars = current_budgets().gc_max_vars
    count = len(instance.variables)
    if count > max_vars:
        raise BudgetExceededError("gc_max_vars", max_vars, count, detail="G_c arena has 2^(|V|+1) positions")

    def owner(label: Hashable) -> int:
        return label[1] if label[0] == "LOSE" else label[0]

    def successors(label: Hashable):
        if label[0] == "LOSE":
            return [label]
        player, alpha = label
        moves = []
        for updated in gc_moves(instance, player, alpha):
            if instance.evaluate(updated):
                moves.append((1 - player, updated))
            else:
                moves.append(LOSE[player])
        return moves

    arena = build_arena((1, instance.initial_valuation), owner, successors,
                        bad=lambda label: label == LOSE[0], what="G_c game")
    solution = solve_safety(arena)
    winner = solution.winner

    strategy: GcStrategy = {}
    for v, w in solution.strategies[winner].choices.items():
        source, target = arena.labels[v], arena.labels[w]
        if source[0] == "LOSE" or target[0] == "LOSE":
            continue
        strategy[source] = target[1]
    logger.info(f"G_c with |V|={count}, {len(instance.clauses)} clauses: Player {winner} wins "
                f"({arena.size} positions)")
    return winner, strategy
