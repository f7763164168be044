"""
Parameterised example families used throughout the tests and by the
``family`` CLI subcommand.

Each constructor documents its language and the state names it uses
(available via ``Automaton.labels``).
"""

from typing import Callable, Dict

from .models import Alphabet, Automaton, FiniteReach, WordMode


def e1() -> Automaton:
    """Two states over {a}: 0 -a-> {0, 1}, F = {1}; L = a·a*"""
    return Automaton.from_edges(
        Alphabet(("a",)), 2, 0, [(0, 0, 0), (0, 0, 1)], FiniteReach({1}), WordMode.FINITE, labels=("0", "1")
    )


def far_a(m: int = 3) -> Automaton:
    """
    States s, p1..pm, q1..qm, t over {a, b}; L = Σ*aΣ^{≥m}.

    Width 2; the minimal DFA has m+2 states.
    """
    if m < 1:
        raise ValueError("far_a requires m >= 1")
    a, b = 0, 1
    s, t = 0, 2 * m + 1
    p = lambda i: i          # noqa: E731
    q = lambda i: m + i      # noqa: E731
    edges = [(s, a, s), (s, b, s), (s, a, p(1)), (s, a, q(1)), (t, a, t), (t, b, t)]
    for i in range(1, m):
        for sym in (a, b):
            edges.append((p(i), sym, p(i + 1)))
            edges.append((q(i), sym, q(i + 1)))
    edges += [(p(m), a, p(m)), (p(m), b, t), (q(m), b, q(m)), (q(m), a, t)]
    labels = ["s"] + [f"p{i}" for i in range(1, m + 1)] + [f"q{i}" for i in range(1, m + 1)] + ["t"]
    return Automaton.from_edges(Alphabet(("a", "b")), 2 * m + 2, s, edges, FiniteReach({t}), WordMode.FINITE, labels)


def fan(n: int = 3) -> Automaton:
    """
    States s, p1..pn, t over a1..an: s -Σ-> pi, pi -ai-> t, F = {t}.

    The subset construction has 3 reachable states, the k-subset
    construction C(n, k) + 2.
    """
    alphabet = Alphabet(tuple(f"a{i}" for i in range(1, n + 1)))
    t = n + 1
    edges = [(0, sym, i) for sym in range(n) for i in range(1, n + 1)]
    edges += [(i, i - 1, t) for i in range(1, n + 1)]
    labels = ["s"] + [f"p{i}" for i in range(1, n + 1)] + ["t"]
    return Automaton.from_edges(alphabet, n + 2, 0, edges, FiniteReach({t}), WordMode.FINITE, labels)


def two_state_universal() -> Automaton:
    """
    q1, q2 both accepting, every letter connects every pair of states.

    L = Σ*, width 1, and every word of length n has 2^n accepting runs.
    """
    edges = [(p, sym, q) for p in (0, 1) for sym in (0, 1) for q in (0, 1)]
    return Automaton.from_edges(Alphabet(("a", "b")), 2, 0, edges, FiniteReach({0, 1}), WordMode.FINITE,
                                labels=("q1", "q2"))


def a_n(n: int = 3) -> Automaton:
    """
    q0..qn over {0, 1}; L = Σ*0Σ^{n-1}.

    Unambiguous, width n + 1, minimal DFA with 2^n states.
    """
    if n < 1:
        raise ValueError("a_n requires n >= 1")
    edges = [(0, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(1, n):
        edges += [(i, 0, i + 1), (i, 1, i + 1)]
    return Automaton.from_edges(Alphabet(("0", "1")), n + 1, 0, edges, FiniteReach({n}), WordMode.FINITE,
                                labels=[f"q{i}" for i in range(n + 1)])


def l_n(n: int = 3) -> Automaton:
    """
    q1..qn over {0, 1}: q1 initial and accepting with a 0-loop, a 0-cycle
    q1 -> q2 -> ... -> qn -> q1, and 1-loops on q2..qn.

    Exponentially ambiguous, width n, minimal DFA with 2^n - 1 states.
    """
    if n < 2:
        raise ValueError("l_n requires n >= 2")
    edges = [(0, 0, 0)]
    for i in range(n):
        edges.append((i, 0, (i + 1) % n))
    for i in range(1, n):
        edges.append((i, 1, i))
    return Automaton.from_edges(Alphabet(("0", "1")), n, 0, edges, FiniteReach({0}), WordMode.FINITE,
                                labels=[f"q{i}" for i in range(1, n + 1)])


FAMILIES: Dict[str, Callable[..., Automaton]] = {
    "e1": lambda _n=None: e1(),
    "far-a": lambda n=3: far_a(n),
    "fan": lambda n=3: fan(n),
    "two-state-universal": lambda _n=None: two_state_universal(),
    "a-n": lambda n=3: a_n(n),
    "l-n": lambda n=3: l_n(n),
}
