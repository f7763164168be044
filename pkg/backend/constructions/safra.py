"""
Safra Construction

Determinisation of Büchi NFAs into deterministic Rabin automata, and the
k-Safra variant that caps the root set at k states and guesses which k
states to keep on overflow.

Features:
- Safra trees as immutable nested nodes (structural hashing merges revisited trees)
- Labels 1..2n, fresh labels taken lowest-first among those unused in the current tree
- Horizontal merge keeps the left-most (oldest) copy of every state
- 2n Rabin pairs: G_i = node i is Green, B_i = no node carries label i
- Tree invariants re-checked on every constructed state
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Set, Tuple

from backend.common.errors import ConsistencyError
from backend.core.determinize import explore, resolve_state_budget
from backend.core.models import Automaton, Buchi, Rabin, RabinPair, WordMode

logger = logging.getLogger(__name__)


# ============================================================================
# Safra Trees
# ============================================================================

@dataclass(frozen=True)
class SafraNode:
    """Node of a Safra tree: label, state set, colour and ordered children"""
    label: int
    states: Tuple[int, ...]
    green: bool = False
    children: Tuple["SafraNode", ...] = ()

    def walk(self) -> Iterator["SafraNode"]:
        """Depth-first, left-to-right"""
        yield self
        for child in self.children:
            yield from child.walk()

    def state_set(self) -> FrozenSet[int]:
        return frozenset(self.states)

    def __str__(self) -> str:
        mark = "!" if self.green else ""
        inner = "".join(str(child) for child in self.children)
        body = ",".join(str(q) for q in self.states)
        return f"{self.label}{mark}{{{body}}}" + (f"[{inner}]" if inner else "")


@dataclass(frozen=True)
class SafraState:
    """A Safra tree identified by its root"""
    root: SafraNode

    def nodes(self) -> List[SafraNode]:
        return list(self.root.walk())

    def labels(self) -> Set[int]:
        return {node.label for node in self.root.walk()}

    def green_labels(self) -> Set[int]:
        return {node.label for node in self.root.walk() if node.green}

    def __str__(self) -> str:
        return str(self.root)


def check_tree(state: SafraState, n: int, k: Optional[int] = None) -> None:
    """Raise ConsistencyError unless ``state`` satisfies the Safra tree invariants"""
    nodes = state.nodes()
    if len(nodes) > n:
        raise ConsistencyError(f"Safra tree with {len(nodes)} nodes for {n} states: {state}")
    labels = [node.label for node in nodes]
    if len(set(labels)) != len(labels):
        raise ConsistencyError(f"duplicate labels in Safra tree {state}")
    if any(not 1 <= label <= 2 * n for label in labels):
        raise ConsistencyError(f"label outside [1, {2 * n}] in Safra tree {state}")
    for node in nodes:
        if node is not state.root and not node.states:
            raise ConsistencyError(f"empty non-root node {node.label} in {state}")
        if k is not None and len(node.states) > k:
            raise ConsistencyError(f"node {node.label} exceeds the cap {k} in {state}")
        union: Set[int] = set()
        for child in node.children:
            if union & child.state_set():
                raise ConsistencyError(f"siblings under node {node.label} share states in {state}")
            union |= child.state_set()
        if node.children and not union < node.state_set():
            raise ConsistencyError(f"children of node {node.label} do not strictly refine it in {state}")


# ============================================================================
# Transition
# ============================================================================

class _SafraStep:
    """One Safra transition for a fixed source automaton"""

    def __init__(self, a: Automaton, k: Optional[int]):
        self.a = a
        self.k = k
        self.n = a.state_count
        self.accepting = a.accepting

    def __call__(self, state: SafraState, sym: int) -> List[SafraState]:
        free = iter(sorted(set(range(1, 2 * self.n + 1)) - state.labels()))
        expanded = self._expand(state.root, free)
        results: List[SafraState] = []
        for root_set in self._root_choices(expanded, sym):
            moved = self._move(expanded, sym, root_set, is_root=True)
            cleaned = self._clean(moved, frozenset())
            pruned = self._prune(cleaned)
            if not pruned.states:
                continue
            successor = SafraState(self._colour(pruned))
            check_tree(successor, self.n, self.k)
            if successor not in results:
                results.append(successor)
        return results

    def _expand(self, node: SafraNode, free: Iterator[int]) -> SafraNode:
        """Add a right-most child holding σ(v) ∩ F below every node meeting F"""
        children = [self._expand(child, free) for child in node.children]
        marked = tuple(q for q in node.states if q in self.accepting)
        if marked:
            children.append(SafraNode(next(free), marked))
        return SafraNode(node.label, node.states, False, tuple(children))

    def _root_choices(self, root: SafraNode, sym: int) -> List[FrozenSet[int]]:
        target = self.a.post(root.states, sym)
        if not target:
            return []
        if self.k is None or len(target) <= self.k:
            return [target]
        return [frozenset(combo) for combo in itertools.combinations(sorted(target), self.k)]

    def _move(self, node: SafraNode, sym: int, root_set: FrozenSet[int], is_root: bool = False) -> SafraNode:
        """Local subset construction, every node intersected with the chosen root set"""
        target = root_set if is_root else self.a.post(node.states, sym) & root_set
        children = tuple(self._move(child, sym, root_set) for child in node.children)
        return SafraNode(node.label, tuple(sorted(target)), False, children)

    def _clean(self, node: SafraNode, forbidden: FrozenSet[int]) -> SafraNode:
        """Drop states already held by a node further left (horizontal merge)"""
        claimed: Set[int] = set()
        children = []
        for child in node.children:
            children.append(self._clean(child, forbidden | claimed))
            claimed |= child.state_set()
        states = tuple(q for q in node.states if q not in forbidden)
        return SafraNode(node.label, states, False, tuple(children))

    def _prune(self, node: SafraNode) -> SafraNode:
        children = tuple(self._prune(child) for child in node.children if child.states)
        return SafraNode(node.label, node.states, False, children)

    def _colour(self, node: SafraNode) -> SafraNode:
        """Nodes covered by their children turn Green and lose the children"""
        if node.children:
            union = set()
            for child in node.children:
                union |= child.state_set()
            if union == node.state_set():
                return SafraNode(node.label, node.states, True, ())
        return SafraNode(node.label, node.states, False, tuple(self._colour(child) for child in node.children))


# ============================================================================
# Constructions
# ============================================================================

def _safra_automaton(a: Automaton, k: Optional[int], state_budget: Optional[int]) -> Automaton:
    if not isinstance(a.acceptance, Buchi):
        raise ValueError("Safra constructions require a Büchi automaton")
    n = a.state_count
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    what = "Safra construction" if k is None else f"{k}-Safra construction"

    initial = SafraState(SafraNode(1, (a.initial,)))
    labels, edges = explore(a.alphabet, initial, _SafraStep(a, k), resolve_state_budget(state_budget), what)

    pairs = []
    for i in range(1, 2 * n + 1):
        good = frozenset(j for j, s in enumerate(labels) if i in s.green_labels())
        bad = frozenset(j for j, s in enumerate(labels) if i not in s.labels())
        pairs.append(RabinPair(good, bad))
    logger.debug(f"{what}: {n} -> {len(labels)} states, {len(pairs)} Rabin pairs")
    return Automaton.from_edges(a.alphabet, len(labels), 0, edges, Rabin(tuple(pairs)), WordMode.INFINITE, labels)


def safra(a: Automaton, state_budget: Optional[int] = None) -> Automaton:
    """
    Deterministic Rabin automaton equivalent to a Büchi NFA.

    An empty root set means no run survives; the transition is left
    undefined instead of materialising a dead tree.
    """
    return _safra_automaton(a, None, state_budget)


def k_safra(a: Automaton, k: int, state_budget: Optional[int] = None) -> Automaton:
    """
    k-Safra construction: nondeterministic Rabin automaton whose root set
    never exceeds k states.

    When Δ(σ(root), a) has more than k states every size-k subset is a
    successor (lexicographic order); every other node is intersected
    with the chosen root set.
    """
    return _safra_automaton(a, k, state_budget)
