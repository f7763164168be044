"""
Reduction from G_c to the width problem.

- build_b: the literal gadget B (2 + 2|V| states, all accepting)
- build_c: the complete safety DFA C restricting Player 1's letters
- build_reduction: the product A of B and C with every (q, ⊤_C) and
  (q_⊤, q') merged into one accepting sink, plus escape transitions to the
  sink whenever C moves to ⊤_C; the width bound is k = |V|

Letters are named a, f_t, a_<lit>, f_<lit>, d_<lit>, c_<i>, e_<var>;
a literal is written x or -x.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from backend.common.errors import ConsistencyError
from backend.core.models import Alphabet, Automaton, FiniteReach, WordMode
from backend.core.operations import deterministic_step, is_universal, trivial_universal
from backend.width.game import width_le

from .models import TURN_VARIABLE, GcInstance, Literal

logger = logging.getLogger(__name__)

B_INITIAL = 0
B_TOP = 1


def _lits1(instance: GcInstance) -> List[Literal]:
    return [lit for v in instance.vars1 for lit in (Literal(v), Literal(v, False))]


def reduction_alphabet(instance: GcInstance) -> Alphabet:
    """{a, f_t} ∪ Γ_Lit ∪ Γ_1 ∪ Σ_D ∪ Σ_C ∪ Σ_V in this order"""
    lits = instance.literals
    names = ["a", f"f_{TURN_VARIABLE}"]
    names += [f"a_{lit}" for lit in lits]
    names += [f"f_{lit}" for lit in _lits1(instance)]
    names += [f"d_{lit}" for lit in lits]
    names += [f"c_{i}" for i in range(1, len(instance.clauses) + 1)]
    names += [f"e_{v}" for v in instance.variables]
    return Alphabet(tuple(names))


# ============================================================================
# Automaton B
# ============================================================================

def literal_state(instance: GcInstance, lit: Literal) -> int:
    """State q_l of B"""
    return 2 + 2 * instance.index(lit.var) + (0 if lit.positive else 1)


def build_b(instance: GcInstance) -> Automaton:
    """Literal gadget: pebbles on q_x / q_-x encode a valuation"""
    alphabet = reduction_alphabet(instance)
    sym = alphabet.index
    lits = instance.literals
    setters = _lits1(instance) + [Literal(TURN_VARIABLE)]
    edges: List[Tuple[int, int, int]] = []

    for lit in lits:
        edges.append((B_INITIAL, sym("a"), literal_state(instance, lit)))

    for lit in lits:
        q = literal_state(instance, lit)
        var = lit.var
        initial_lit = instance.true_literal(var)
        for other in lits:
            target = B_TOP if other == lit else literal_state(instance, initial_lit)
            edges.append((q, sym(f"d_{other}"), target))
        for setter in setters:
            target = literal_state(instance, setter) if setter.var == var else q
            edges.append((q, sym(f"f_{setter}"), target))

        if var in instance.vars0:
            edges.append((q, sym("a"), literal_state(instance, Literal(var))))
            edges.append((q, sym("a"), literal_state(instance, Literal(var, False))))
        elif var in instance.vars1:
            edges.append((q, sym("a"), q))
        else:
            edges.append((q, sym("a"), literal_state(instance, Literal(TURN_VARIABLE, False))))

        for other in lits:
            if other == lit:
                edges.append((q, sym(f"a_{other}"), q))
            elif other == lit.negation:
                edges.append((q, sym(f"a_{other}"), B_TOP))
            else:
                edges.append((q, sym(f"a_{other}"), q))

        edges.append((q, sym(f"e_{var}"), B_TOP))
        for i, clause in enumerate(instance.clauses, 1):
            if lit in clause:
                edges.append((q, sym(f"c_{i}"), B_TOP))

    edges.extend((B_TOP, s, B_TOP) for s in alphabet.indices)
    labels = ["q0", "qT"] + [f"q_{lit}" for lit in lits]
    n = 2 + len(lits)
    return Automaton.from_edges(alphabet, n, B_INITIAL, edges, FiniteReach(frozenset(range(n))),
                                WordMode.FINITE, labels, safety=True)


# ============================================================================
# Automaton C
# ============================================================================

class CLayout:
    """State numbering of C: init, d, t1, w, g_1..g_m, val_0..val_n, p, pv, top"""

    def __init__(self, instance: GcInstance):
        self.m = len(instance.vars1)
        self.n = len(instance.clauses)
        self.init, self.d, self.t1, self.w = 0, 1, 2, 3
        self.gamma = [4 + j for j in range(self.m)]
        self.val = [4 + self.m + i for i in range(self.n + 1)]
        self.p = self.val[-1] + 1
        self.pv = self.p + 1
        self.top = self.pv + 1
        self.size = self.top + 1

    @property
    def labels(self) -> List[str]:
        return (["init", "d", "t1", "w"] + [f"g{j + 1}" for j in range(self.m)]
                + [f"val{i}" for i in range(self.n + 1)] + ["p", "pv", "top"])

    @property
    def types(self) -> Dict[int, int]:
        """Positions owned by a player of G_c: 1 after Σ_D and after a, 0 after L_val"""
        return {self.t1: 1, self.val[-1]: 0, self.p: 1}


def build_c(instance: GcInstance) -> Automaton:
    """Complete DFA for the prefixes of L_C, all states accepting, ⊤_C absorbing"""
    alphabet = reduction_alphabet(instance)
    sym = alphabet.index
    layout = CLayout(instance)
    lits = instance.literals
    sigma_d = [sym(f"d_{lit}") for lit in lits]
    sigma_v = [sym(f"e_{v}") for v in instance.variables]
    sigma_c = [sym(f"c_{i}") for i in range(1, layout.n + 1)]
    gamma_1 = [sym(f"f_{lit}") for lit in _lits1(instance)]
    f_t = sym(f"f_{TURN_VARIABLE}")

    delta: Dict[Tuple[int, int], int] = {}
    delta[(layout.init, sym("a"))] = layout.d
    for s in sigma_d:
        delta[(layout.d, s)] = layout.t1
    for s in sigma_v:
        delta[(layout.t1, s)] = layout.w
        delta[(layout.p, s)] = layout.pv
    for start in (layout.t1, layout.w, layout.p, layout.pv):
        if layout.m:
            for s in gamma_1:
                delta[(start, s)] = layout.gamma[0]
        else:
            delta[(start, f_t)] = layout.val[0]
    for j in range(layout.m - 1):
        for s in gamma_1:
            delta[(layout.gamma[j], s)] = layout.gamma[j + 1]
    if layout.m:
        delta[(layout.gamma[-1], f_t)] = layout.val[0]
    for i, clause in enumerate(instance.clauses):
        for lit in clause:
            delta[(layout.val[i], sym(f"a_{lit}"))] = layout.val[i + 1]
    delta[(layout.val[-1], sym("a"))] = layout.p
    for s in sigma_c:
        delta[(layout.p, s)] = layout.w
        delta[(layout.pv, s)] = layout.w

    edges = [
        (q, s, delta.get((q, s), layout.top))
        for q in range(layout.size)
        for s in alphabet.indices
    ]
    return Automaton.from_edges(alphabet, layout.size, layout.init, edges,
                                FiniteReach(frozenset(range(layout.size))), WordMode.FINITE,
                                layout.labels, safety=True)


# ============================================================================
# Automaton A
# ============================================================================

def build_reduction(instance: GcInstance, check_universal: bool = True) -> Tuple[Automaton, int]:
    """
    Universal safety NFA A with width(A) <= |V| iff Player 0 wins G_c.

    Returns:
        (A, k = |V|)

    Raises:
        ConsistencyError: the product is not universal
    """
    b = build_b(instance)
    c = build_c(instance)
    c_top = CLayout(instance).top
    alphabet = b.alphabet

    start = (B_INITIAL, c.initial)
    index: Dict[object, int] = {start: 0}
    labels: List[object] = [start]
    edges: List[Tuple[int, int, int]] = []
    queue = deque([start])

    def state(label) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
            if label != "TOP":
                queue.append(label)
        return index[label]

    while queue:
        q, s = queue.popleft()
        source = index[(q, s)]
        for x in alphabet.indices:
            s_next = deterministic_step(c, s, x)
            if s_next == c_top:
                edges.append((source, x, state("TOP")))
                continue
            for r in sorted(b.transitions[q][x]):
                target = state("TOP") if r == B_TOP else state((r, s_next))
                edges.append((source, x, target))
    if "TOP" in index:
        top = index["TOP"]
        edges.extend((top, x, top) for x in alphabet.indices)

    names = ["TOP" if label == "TOP" else f"{b.label(label[0])}|{c.label(label[1])}" for label in labels]
    a = Automaton.from_edges(alphabet, len(labels), 0, edges, FiniteReach(frozenset(range(len(labels)))),
                             WordMode.FINITE, names, safety=True)
    k = len(instance.variables)
    logger.info(f"reduction: |V|={k}, {len(instance.clauses)} clauses -> "
                f"{a.state_count} states, {len(alphabet)} letters")
    if check_universal and not is_universal(a):
        raise ConsistencyError("reduction automaton is not universal")
    return a, k


def reduction_width_le(
    a: Automaton,
    k: int,
    no_duplication: bool = True,
    arena_budget: Optional[int] = None,
) -> bool:
    """
    width(A) <= k for a universal reduction automaton, played against the
    one-state universal referee with undominated moves only.
    """
    referee = trivial_universal(a.alphabet)
    verdict, _ = width_le(a, k, no_duplication=no_duplication, referee=referee, dominance=True,
                          arena_budget=arena_budget)
    return verdict
