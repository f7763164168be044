"""
Hamiltonian-cycle reduction to DBP for coBüchi automata.

Every vertex i of G becomes a cloud {p_i, q_i, r_i}:

    p_i -a_i-> q_i,  p_i -a_j-> r_i (j != i),  q_i -#-> p_i,
    r_i -#-> p_k for every edge (i, k)

with F = {p_i, q_i}. The only nondeterminism is r_i on #, so a pruning
picks one out-edge per vertex.
"""

import itertools
import logging
from typing import Dict, List, Optional

from backend.core.models import Automaton, CoBuchi, UPWord, WordMode
from backend.gfg.models import Pruning

from .models import DiGraph

logger = logging.getLogger(__name__)

SEPARATOR = "#"


def p_state(i: int) -> int:
    return 3 * (i - 1)


def q_state(i: int) -> int:
    return 3 * (i - 1) + 1


def r_state(i: int) -> int:
    return 3 * (i - 1) + 2


def build_ham_nca(g: DiGraph) -> Automaton:
    """The 3n-state NCA over {a_1, ..., a_n, #} with initial state p_1"""
    if not g.strongly_connected:
        logger.warning(f"graph with {g.n} vertices is not strongly connected; "
                       f"the language of the automaton depends on the start vertex")
    alphabet = [f"a_{i}" for i in range(1, g.n + 1)] + [SEPARATOR]
    hash_sym = g.n
    edges = []
    for i in range(1, g.n + 1):
        for j in range(1, g.n + 1):
            edges.append((p_state(i), j - 1, q_state(i) if j == i else r_state(i)))
        edges.append((q_state(i), hash_sym, p_state(i)))
        for k in g.successors(i):
            edges.append((r_state(i), hash_sym, p_state(k)))
    accepting = frozenset(s for i in range(1, g.n + 1) for s in (p_state(i), q_state(i)))
    labels = [f"{kind}{i}" for i in range(1, g.n + 1) for kind in ("p", "q", "r")]
    return Automaton.from_edges(alphabet, 3 * g.n, p_state(1), edges, CoBuchi(accepting),
                                WordMode.INFINITE, labels)


def find_hamiltonian_cycle(g: DiGraph) -> Optional[List[int]]:
    """Brute force over the orders of vertices 2..n; the cycle is returned starting at 1"""
    if g.n == 1:
        return [1] if (1, 1) in g.edges else None
    for order in itertools.permutations(range(2, g.n + 1)):
        cycle = [1, *order]
        if all((cycle[i], cycle[(i + 1) % g.n]) in g.edges for i in range(g.n)):
            return cycle
    return None


def has_hamiltonian_cycle(g: DiGraph) -> bool:
    return find_hamiltonian_cycle(g) is not None


def cycle_from_pruning(g: DiGraph, pruning: Pruning) -> Optional[List[int]]:
    """
    The cycle through vertex 1 selected by a pruning of build_ham_nca(g), if
    it visits every vertex exactly once.
    """
    successor: Dict[int, int] = {}
    for i in range(1, g.n + 1):
        chosen = pruning.choices.get((r_state(i), g.n))
        if chosen is not None:
            successor[i] = chosen // 3 + 1
        elif len(g.successors(i)) == 1:
            successor[i] = g.successors(i)[0]
    cycle = [1]
    while len(cycle) <= g.n:
        nxt = successor.get(cycle[-1])
        if nxt is None:
            return None
        if nxt == 1:
            return cycle if len(cycle) == g.n else None
        if nxt in cycle:
            return None
        cycle.append(nxt)
    return None


def ham_language_member(n: int, w: UPWord) -> bool:
    """
    Membership in the union over i of (Σ'#)*(a_i#)^ω, where Σ' = {a_1..a_n}
    and # is symbol index n.
    """
    hash_sym = n
    unrolled = list(w.prefix) + list(w.period) * 2
    for position, letter in enumerate(unrolled):
        if (letter == hash_sym) != (position % 2 == 1):
            return False
    if len(w.period) % 2:
        return False
    letters = {letter for letter in w.period if letter != hash_sym}
    return len(letters) == 1
