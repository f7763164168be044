"""
GFG Package

Good-for-games checks by letter games, strategy pruning, and
determinisability-by-pruning searches for ω-automata.
"""

from .dbp import (
    PruningSearch,
    dbp_check_buchi,
    dbp_check_nca,
    dbp_check_rabin,
    find_inclusion_counterexample,
    inclusion_nca_in_dca,
)
from .letter_game import (
    LetterGame,
    dbp_check_nfa,
    default_letter_referee,
    gfg_check_nca,
    gfg_check_nfa,
    live_cobuchi_referee,
    prune_to_dfa,
    strategy_pruning,
)
from .models import LetterStrategy, Pruning, pruned_reachable

__all__ = [
    "LetterGame",
    "LetterStrategy",
    "Pruning",
    "PruningSearch",
    "dbp_check_buchi",
    "dbp_check_nca",
    "dbp_check_nfa",
    "dbp_check_rabin",
    "default_letter_referee",
    "find_inclusion_counterexample",
    "gfg_check_nca",
    "gfg_check_nfa",
    "inclusion_nca_in_dca",
    "live_cobuchi_referee",
    "prune_to_dfa",
    "pruned_reachable",
    "strategy_pruning",
]
