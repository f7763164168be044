"""
Game Solvers

- Safety games: Player-1 attractor of the bad positions (linear time).
- Parity games: recursive attractor decomposition (max-even convention).

Both solvers return the winning regions of both players with positional
strategies. Ties between equally good successors are broken towards the
lowest position index, so results are reproducible.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Optional, Set, Tuple

from backend.common.errors import ConsistencyError

from .models import GameArena, GameSolution, Parity, Safety, Strategy

logger = logging.getLogger(__name__)

Choices = Dict[int, int]


# ============================================================================
# Attractors
# ============================================================================

def attractor(
    arena: GameArena,
    player: int,
    target: Iterable[int],
    within: Optional[Set[int]] = None,
) -> Tuple[Set[int], Choices]:
    """
    Positions of ``within`` from which ``player`` can force a visit to ``target``.

    Positions of the opponent without successors inside ``within`` are
    attracted as well (the opponent is stuck there and loses).

    Returns:
        (attractor set, attracting move for each of player's positions
        outside the target)
    """
    universe = set(arena.positions) if within is None else within
    owners = arena.owners
    preds = arena.predecessors

    rank: Dict[int, int] = {}
    queue = deque()
    for v in sorted(set(target) & universe):
        rank[v] = 0
        queue.append(v)

    remaining: Dict[int, int] = {}
    for v in sorted(universe):
        if owners[v] != player and v not in rank:
            remaining[v] = sum(1 for w in arena.successors[v] if w in universe)
            if remaining[v] == 0:
                rank[v] = 0
                queue.append(v)

    while queue:
        u = queue.popleft()
        for v in preds[u]:
            if v not in universe or v in rank:
                continue
            if owners[v] == player:
                rank[v] = rank[u] + 1
                queue.append(v)
            else:
                remaining[v] -= 1
                if remaining[v] == 0:
                    rank[v] = rank[u] + 1
                    queue.append(v)

    target_set = set(target)
    moves: Choices = {}
    for v, r in rank.items():
        if owners[v] == player and v not in target_set:
            moves[v] = min(w for w in arena.successors[v] if w in rank and rank[w] < r)
    return set(rank), moves


def _stay_inside(arena: GameArena, positions: Iterable[int], region: Set[int], owner: int) -> Choices:
    """Lowest-index successor inside ``region`` for each of owner's positions"""
    moves: Choices = {}
    for v in positions:
        if arena.owners[v] == owner:
            inside = [w for w in arena.successors[v] if w in region]
            if inside:
                moves[v] = min(inside)
    return moves


def _check_closed(arena: GameArena, regions: Tuple[FrozenSet[int], ...], strategies: Tuple[Strategy, ...]) -> None:
    """Each region is closed under its owner's strategy and all opponent moves; bad positions are exempt"""
    for player in (0, 1):
        region = regions[player]
        for v in sorted(region):
            if arena.is_bad(v):
                continue
            if arena.owners[v] == player:
                if not arena.successors[v]:
                    raise ConsistencyError(f"player {player} is stuck at {v} inside its own winning region")
                if v not in strategies[player]:
                    raise ConsistencyError(f"no strategy move for player {player} at {v}")
                targets = (strategies[player][v],)
            else:
                targets = arena.successors[v]
            for w in targets:
                if w not in region:
                    raise ConsistencyError(f"winning region of player {player} is left at {v} -> {w}")


def _solution(arena: GameArena, region0: Set[int], region1: Set[int], choices: Choices) -> GameSolution:
    if region0 & region1 or len(region0) + len(region1) != arena.size:
        raise ConsistencyError(
            f"winning regions do not partition the arena: |W0|={len(region0)} |W1|={len(region1)} "
            f"n={arena.size}"
        )
    regions = (frozenset(region0), frozenset(region1))
    strategies = tuple(
        Strategy(player, {v: w for v, w in sorted(choices.items())
                          if arena.owners[v] == player and v in regions[player]})
        for player in (0, 1)
    )
    _check_closed(arena, regions, strategies)
    return GameSolution(arena, regions, strategies)


# ============================================================================
# Safety
# ============================================================================

def solve_safety(arena: GameArena) -> GameSolution:
    """
    Solve a safety game.

    Player 1 wins exactly on the attractor of the bad positions (dead
    Player-0 positions included); Player 0 keeps the play inside the
    complement by always moving to its lowest-index successor there.
    """
    if not isinstance(arena.condition, Safety):
        raise ValueError("solve_safety requires a safety condition")
    region1, moves1 = attractor(arena, 1, arena.condition.bad)
    region0 = set(arena.positions) - region1

    choices: Choices = dict(moves1)
    # Player 1 has already won on bad positions; any move will do
    for v in sorted(arena.condition.bad):
        if arena.owners[v] == 1 and arena.successors[v]:
            choices[v] = min(arena.successors[v])
    choices.update(_stay_inside(arena, sorted(region0), region0, 0))

    logger.debug(f"safety game: {arena.size} positions, |W0|={len(region0)}, |W1|={len(region1)}")
    return _solution(arena, region0, region1, choices)


# ============================================================================
# Parity
# ============================================================================

def _zielonka(arena: GameArena, nodes: FrozenSet[int]) -> Tuple[Set[int], Set[int], Choices]:
    """Recursive solver on a subgame in which every position has a successor inside ``nodes``"""
    if not nodes:
        return set(), set(), {}
    priority = arena.condition.priority
    top = max(priority[v] for v in nodes)
    p = top % 2
    opponent = 1 - p

    heads = {v for v in nodes if priority[v] == top}
    region_a, moves_a = attractor(arena, p, heads, set(nodes))
    sub = _zielonka(arena, frozenset(nodes - region_a))
    sub_regions = (sub[0], sub[1])

    if not sub_regions[opponent]:
        choices = dict(sub[2])
        choices.update(moves_a)
        choices.update(_stay_inside(arena, sorted(heads), set(nodes), p))
        won = set(nodes)
        return (won, set(), choices) if p == 0 else (set(), won, choices)

    region_b, moves_b = attractor(arena, opponent, sub_regions[opponent], set(nodes))
    rest = _zielonka(arena, frozenset(nodes - region_b))
    regions = [set(rest[0]), set(rest[1])]
    regions[opponent] |= region_b

    choices = dict(rest[2])
    for v, w in sub[2].items():
        if v in sub_regions[opponent] and arena.owners[v] == opponent:
            choices[v] = w
    choices.update(moves_b)
    return regions[0], regions[1], choices


def solve_parity(arena: GameArena) -> GameSolution:
    """
    Solve a max-even parity game.

    Dead ends are removed first: the Player-1 attractor of stuck Player-0
    positions is won by Player 1, then the Player-0 attractor of stuck
    Player-1 positions (in the remainder) by Player 0. The rest is a
    total subgame solved recursively.
    """
    if not isinstance(arena.condition, Parity):
        raise ValueError("solve_parity requires a parity condition")
    everything = set(arena.positions)

    stuck1, moves1 = attractor(arena, 1, (), everything)
    remainder = everything - stuck1
    stuck0, moves0 = attractor(arena, 0, (), remainder)
    core = frozenset(remainder - stuck0)

    region0, region1, choices = _zielonka(arena, core)
    region0 |= stuck0
    region1 |= stuck1
    choices.update(moves0)
    choices.update(moves1)

    logger.debug(f"parity game: {arena.size} positions, max priority {arena.condition.max_priority}, "
                 f"|W0|={len(region0)}, |W1|={len(region1)}")
    return _solution(arena, region0, region1, choices)


def solve(arena: GameArena) -> GameSolution:
    """Dispatch on the winning condition"""
    if isinstance(arena.condition, Safety):
        return solve_safety(arena)
    return solve_parity(arena)
