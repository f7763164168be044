"""
Pebble configurations shared by width games and multipebble simulation.

A configuration is a sorted tuple of automaton states:
- subset mode: a set of at most k states (no repetitions)
- pebble mode (no duplication): a multiset of the surviving pebbles out of k;
  every pebble follows one transition or dies, one pebble never becomes two
"""

import itertools
from collections import Counter
from typing import FrozenSet, Iterable, List, Tuple

from backend.core.models import Automaton

Config = Tuple[int, ...]


def initial_config(initial: int, k: int, no_duplication: bool) -> Config:
    return (initial,) * k if no_duplication else (initial,)


def config_moves(
    a: Automaton,
    config: Config,
    sym: int,
    k: int,
    no_duplication: bool = False,
    dominance: bool = False,
) -> List[Config]:
    """
    Successor configurations after reading ``sym``.

    Subset mode offers every X' ⊆ Δ(X, sym) with |X'| <= k, the empty set
    included, largest sets first. Pebble mode offers every way of moving
    each pebble along one transition or dropping it.

    With ``dominance`` only undominated moves are offered (maximal subsets;
    pebbles are dropped only when stuck). Keeping more pebbles never hurts
    the pebble owner, so game verdicts do not change.
    """
    if no_duplication:
        return _pebble_moves(a, config, sym, dominance)
    target = sorted(a.post(config, sym))
    if dominance:
        if len(target) <= k:
            return [tuple(target)]
        return list(itertools.combinations(target, k))
    moves: List[Config] = []
    for size in range(min(k, len(target)), -1, -1):
        moves.extend(itertools.combinations(target, size))
    return moves


def _pebble_moves(a: Automaton, config: Config, sym: int, dominance: bool) -> List[Config]:
    groups = []
    for q, count in sorted(Counter(config).items()):
        options: List = sorted(a.transitions[q][sym])
        if not options or not dominance:
            options = options + [None]
        groups.append(list(itertools.combinations_with_replacement(options, count)))
    moves = set()
    for combo in itertools.product(*groups):
        moves.add(tuple(sorted(q for group in combo for q in group if q is not None)))
    return sorted(moves, key=lambda c: (-len(c), c))


def holds_sink(config: Iterable[int], sinks: FrozenSet[int]) -> bool:
    return any(q in sinks for q in config)
