"""
Ambiguity profiling: exact counts of accepting runs.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from backend.common.errors import BudgetExceededError

from .models import Automaton, WordMode

logger = logging.getLogger(__name__)


def _step_counts(a: Automaton, counts: Tuple[int, ...], letter: int) -> Tuple[int, ...]:
    nxt = [0] * a.state_count
    for q, c in enumerate(counts):
        if c:
            for r in a.transitions[q][letter]:
                nxt[r] += c
    return tuple(nxt)


def _initial_counts(a: Automaton) -> Tuple[int, ...]:
    counts = [0] * a.state_count
    counts[a.initial] = 1
    return tuple(counts)


def count_accepting_runs(a: Automaton, word: Sequence[int]) -> int:
    """
    Number of accepting runs of a on word.

    Dynamic programming over per-state path counts; Python integers keep
    the count exact.
    """
    if a.word_mode != WordMode.FINITE:
        raise ValueError("count_accepting_runs requires a finite-word automaton")
    counts = _initial_counts(a)
    for letter in word:
        counts = _step_counts(a, counts, letter)
    return sum(counts[q] for q in a.accepting)


def max_ambiguity_profile(a: Automaton, max_len: int,
                          ambiguity_budget: Optional[int] = None) -> List[Tuple[int, int]]:
    """
    Maximum number of accepting runs over all words of each length.

    Words sharing a prefix share their count vector, and distinct words
    with identical count vectors are merged; the maximum is still taken
    over every word of the given length.

    Args:
        a: finite-word NFA
        max_len: longest word length profiled
        ambiguity_budget: guard on |Σ|^max_len (default from config)

    Returns:
        [(length, max count)] for length = 0..max_len
    """
    if a.word_mode != WordMode.FINITE:
        raise ValueError("max_ambiguity_profile requires a finite-word automaton")
    if ambiguity_budget is None:
        from config import current_budgets
        ambiguity_budget = current_budgets().ambiguity_budget
    words = len(a.alphabet) ** max_len
    if words > ambiguity_budget:
        raise BudgetExceededError("ambiguity_budget", ambiguity_budget, words,
                                  detail=f"|Σ|^{max_len} words")

    accepting = sorted(a.accepting)
    layer = {_initial_counts(a)}
    profile: List[Tuple[int, int]] = []
    for length in range(max_len + 1):
        best = max(sum(counts[q] for q in accepting) for counts in layer)
        profile.append((length, best))
        if length == max_len:
            break
        nxt = set()
        for counts in layer:
            for letter in a.alphabet.indices:
                nxt.add(_step_counts(a, counts, letter))
        layer = nxt
        logger.debug(f"ambiguity profile: length {length + 1}, {len(layer)} distinct count vectors")
    return profile
