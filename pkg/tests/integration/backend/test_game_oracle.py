"""
Integration Tests for the game solvers against brute-force strategy enumeration
"""

import itertools
import random

import networkx as nx
import pytest

from backend.games import Parity, random_arena, solve

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def _player0_strategies(arena):
    owned = [v for v in arena.positions if arena.owners[v] == 0 and arena.successors[v]]
    for choice in itertools.product(*(arena.successors[v] for v in owned)):
        yield dict(zip(owned, choice))


def _wins(arena, strategy) -> bool:
    """Does the positional strategy win from the initial position against every Player-1 play"""
    graph = nx.DiGraph()
    graph.add_node(arena.initial)
    for v in arena.positions:
        targets = [strategy[v]] if v in strategy else arena.successors[v]
        graph.add_edges_from((v, w) for w in targets)
    reachable = nx.descendants(graph, arena.initial) | {arena.initial}
    if any(arena.owners[v] == 0 and not arena.successors[v] for v in reachable):
        return False
    if not isinstance(arena.condition, Parity):
        return not reachable & arena.condition.bad
    priority = arena.condition.priority
    for d in range(1, arena.condition.max_priority + 1, 2):
        sub = graph.subgraph([v for v in reachable if priority[v] <= d])
        for scc in nx.strongly_connected_components(sub):
            if not any(priority[v] == d for v in scc):
                continue
            if len(scc) > 1 or sub.has_edge(next(iter(scc)), next(iter(scc))):
                return False
    return True


class TestOracle:

    @pytest.mark.parametrize("safety", [False, True])
    def test_seeded_arenas(self, safety):
        rng = random.Random(20240606 + safety)
        for index in range(250):
            arena = random_arena(rng, rng.randint(1, 8), max_priority=2, safety=safety)
            expected = 0 if any(_wins(arena, s) for s in _player0_strategies(arena)) else 1
            assert solve(arena).winner == expected, f"arena {index}"
