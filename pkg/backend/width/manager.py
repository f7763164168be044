"""
Width Manager

Width computations by increasing k:

- width_nfa: safety game Gw(A, k) per k
- width_nca: parity letter game on the k-breakpoint construction per k
- incremental_determinize_nfa / incremental_gfg_nca: the same loops,
  returning the automaton found at the stopping k
- det_width: DBP search on the k-construction (k-subset, k-breakpoint or
  k-Safra)
"""

import logging
from typing import List, Optional, Tuple

from backend.common.errors import BudgetExceededError
from backend.constructions import k_breakpoint, k_safra, k_subset
from backend.core.determinize import minimize_dfa
from backend.core.models import Automaton, Buchi, CoBuchi, Rabin
from backend.core.operations import is_deterministic
from backend.gfg import (
    LetterGame,
    dbp_check_nca,
    dbp_check_nfa,
    dbp_check_rabin,
    default_letter_referee,
    prune_to_dfa,
)

from .game import WidthGame
from .models import KVerdict, WidthMethod, WidthReport

logger = logging.getLogger(__name__)


def _k_range(a: Automaton, max_k: Optional[int], from_k: int) -> range:
    n = a.state_count
    top = n if max_k is None else min(max_k, n)
    if from_k < 1:
        raise ValueError(f"from_k must be at least 1, got {from_k}")
    return range(from_k, top + 1)


def width_nfa(
    a: Automaton,
    max_k: Optional[int] = None,
    from_k: int = 1,
    no_duplication: bool = False,
    referee: Optional[Automaton] = None,
    dominance: bool = False,
    with_construction: bool = False,
) -> WidthReport:
    """
    Least k in [from_k, max_k] such that Player 0 wins Gw(a, k).

    Args:
        a: finite-word NFA
        max_k: last bound tried (default: number of states)
        from_k: first bound tried
        no_duplication: play with k distinct pebbles
        referee: DFA for L(a) shared by all bounds
        dominance: offer only undominated Player-0 moves
        with_construction: also record the size of the k-subset construction

    Returns:
        WidthReport (width None if no bound in range wins)
    """
    if not a.is_finite:
        raise ValueError("width_nfa requires a finite-word automaton")
    if referee is None:
        referee = default_letter_referee(a)
    report = WidthReport(None, WidthMethod.WIDTH_GAME, a.state_count)
    for k in _k_range(a, max_k, from_k):
        game = WidthGame(a, k, no_duplication, referee, dominance)
        wins = game.player0_wins
        states = k_subset(a, k).state_count if with_construction else None
        report.verdicts.append(KVerdict(k, wins, game.arena.size, states))
        logger.info(f"width game k={k}: {'Player 0' if wins else 'Player 1'} wins "
                    f"({game.arena.size} positions)")
        if wins:
            report.width = k
            report.strategy = game.pebble_strategy()
            break
    return report


def width_nca(a: Automaton, max_k: Optional[int] = None, from_k: int = 1) -> WidthReport:
    """Least k such that the k-breakpoint construction of a coBüchi NFA is GFG"""
    report, _ = incremental_gfg_nca(a, max_k, from_k)
    return report


def incremental_determinize_nfa(
    a: Automaton,
    max_k: Optional[int] = None,
    from_k: int = 1,
) -> Tuple[WidthReport, Optional[Automaton]]:
    """
    Increase k until the k-subset construction is GFG, then prune it with
    the letter-game strategy and minimise.

    Returns:
        (report, minimal DFA for L(a)); the DFA is None if no bound in range wins
    """
    if not a.is_finite:
        raise ValueError("incremental_determinize_nfa requires a finite-word automaton")
    referee = default_letter_referee(a)
    report = WidthReport(None, WidthMethod.K_SUBSET_GFG, a.state_count)
    for k in _k_range(a, max_k, from_k):
        ak = k_subset(a, k)
        game = LetterGame(ak, referee)
        wins = game.player0_wins
        report.verdicts.append(KVerdict(k, wins, game.arena.size, ak.state_count))
        logger.info(f"{k}-subset construction: {ak.state_count} states, GFG={wins}")
        if wins:
            strategy = game.strategy()
            report.width = k
            report.strategy = strategy.moves
            dfa = minimize_dfa(prune_to_dfa(ak, strategy))
            logger.info(f"pruned A_{k} minimises to {dfa.state_count} states")
            return report, dfa
    return report, None


def incremental_gfg_nca(
    a: Automaton,
    max_k: Optional[int] = None,
    from_k: int = 1,
) -> Tuple[WidthReport, Optional[Automaton]]:
    """
    Increase k until the k-breakpoint construction is GFG.

    Returns:
        (report, GFG coBüchi automaton A_k at the stopping k or None)
    """
    if not isinstance(a.acceptance, CoBuchi):
        raise ValueError("incremental_gfg_nca requires a coBüchi automaton")
    referee = default_letter_referee(a)
    report = WidthReport(None, WidthMethod.K_BREAKPOINT_GFG, a.state_count)
    for k in _k_range(a, max_k, from_k):
        ak = k_breakpoint(a, k)
        game = LetterGame(ak, referee)
        wins = game.player0_wins
        report.verdicts.append(KVerdict(k, wins, game.arena.size, ak.state_count))
        logger.info(f"{k}-breakpoint construction: {ak.state_count} states, GFG={wins}")
        if wins:
            report.width = k
            report.strategy = game.strategy().moves
            return report, ak
    return report, None


def det_width(
    a: Automaton,
    max_k: Optional[int] = None,
    state_budget: Optional[int] = None,
    pruning_budget: Optional[int] = None,
) -> Optional[int]:
    """
    Least k such that the k-construction of ``a`` is determinisable by pruning.

    Finite words use k-subset, coBüchi k-breakpoint, Büchi k-Safra.
    Deterministic Rabin automata have det-width 1.

    Raises:
        BudgetExceededError: a construction or pruning search exceeded its
            budget; ``partial`` lists the bounds already refuted
    """
    if isinstance(a.acceptance, Rabin):
        if is_deterministic(a):
            return 1
        raise ValueError("det_width is defined for deterministic Rabin automata only")
    if not a.is_finite and not isinstance(a.acceptance, (CoBuchi, Buchi)):
        raise ValueError(f"det_width does not support {a.kind.value} automata")

    refuted: List[int] = []
    for k in _k_range(a, max_k, 1):
        try:
            if a.is_finite:
                verdict = dbp_check_nfa(k_subset(a, k, state_budget))[0]
            elif isinstance(a.acceptance, CoBuchi):
                verdict = dbp_check_nca(k_breakpoint(a, k, state_budget), pruning_budget)[0]
            else:
                verdict = dbp_check_rabin(k_safra(a, k, state_budget), pruning_budget)[0]
        except BudgetExceededError as exc:
            logger.warning(f"det_width stopped at k={k}: {exc}")
            exc.partial = list(refuted)
            raise
        logger.info(f"det_width k={k}: DBP={verdict}")
        if verdict:
            return k
        refuted.append(k)
    return None
