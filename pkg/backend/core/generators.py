"""
Seeded random automata for property suites.
"""

import random
from typing import Optional

from .models import Alphabet, Automaton, Buchi, CoBuchi, FiniteReach, WordMode

_ACCEPTANCE = {
    "nfa": (FiniteReach, WordMode.FINITE),
    "nca": (CoBuchi, WordMode.INFINITE),
    "nba": (Buchi, WordMode.INFINITE),
}


def random_automaton(
    rng: random.Random,
    n: int,
    alphabet_size: int = 2,
    kind: str = "nfa",
    density: float = 0.35,
    accepting_probability: float = 0.4,
    alphabet: Optional[Alphabet] = None,
) -> Automaton:
    """
    Random automaton with n states.

    Each (p, a, q) is an edge with probability ``density``; every state
    gets at least one outgoing edge so runs are rarely trivially dead.
    """
    acceptance_type, word_mode = _ACCEPTANCE[kind]
    alphabet = alphabet or Alphabet(tuple("abcdefgh"[:alphabet_size]))
    edges = []
    for p in range(n):
        outgoing = [(p, sym, q) for sym in alphabet.indices for q in range(n) if rng.random() < density]
        if not outgoing:
            outgoing = [(p, rng.randrange(len(alphabet)), rng.randrange(n))]
        edges += outgoing
    accepting = {q for q in range(n) if rng.random() < accepting_probability}
    if not accepting:
        accepting = {rng.randrange(n)}
    return Automaton.from_edges(alphabet, n, 0, edges, acceptance_type(frozenset(accepting)), word_mode)


def random_nfa(rng: random.Random, n: int, alphabet_size: int = 2, **kwargs) -> Automaton:
    return random_automaton(rng, n, alphabet_size, "nfa", **kwargs)


def random_nca(rng: random.Random, n: int, alphabet_size: int = 2, **kwargs) -> Automaton:
    return random_automaton(rng, n, alphabet_size, "nca", **kwargs)


def random_nba(rng: random.Random, n: int, alphabet_size: int = 2, **kwargs) -> Automaton:
    return random_automaton(rng, n, alphabet_size, "nba", **kwargs)
