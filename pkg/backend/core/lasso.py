"""
Accepting-lasso search on implicitly given graphs.

A lasso is a path from the initial node to a strongly connected set plus a
cycle inside that set. A LoopCondition describes which nodes the cycle may
use (``allowed``) and a list of obligations ``(E, F)``: the cycle must contain
an E-node or contain no F-node (``F=None`` means "must contain an E-node").
This covers Büchi, coBüchi and Rabin acceptance as well as Rabin × Streett
products (the dual of a deterministic Rabin automaton). Nontrivial SCCs that
violate an obligation are refined by removing their F-nodes and searching
the remaining sub-SCCs again.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from backend.common.errors import BudgetExceededError

from .models import AcceptanceCondition, Buchi, CoBuchi, FiniteReach, Rabin, UPWord

logger = logging.getLogger(__name__)

Node = Hashable
Predicate = Callable[[Node], bool]
SuccessorFn = Callable[[Node], Iterable[Tuple[int, Node]]]


def _always(_node: Node) -> bool:
    return True


@dataclass
class LoopCondition:
    """Constraint on the cycle part of a lasso"""
    allowed: Predicate = _always
    obligations: List[Tuple[Predicate, Optional[Predicate]]] = field(default_factory=list)

    def extended(self, extra: Sequence[Tuple[Predicate, Optional[Predicate]]]) -> "LoopCondition":
        return LoopCondition(self.allowed, list(self.obligations) + list(extra))


@dataclass
class Lasso:
    """Witness path: prefix letters/nodes, then a cycle returning to its first node"""
    prefix: Tuple[int, ...]
    period: Tuple[int, ...]
    prefix_nodes: Tuple[Node, ...]
    cycle_nodes: Tuple[Node, ...]

    @property
    def word(self) -> UPWord:
        return UPWord(self.prefix, self.period)


class ExploredGraph:
    """Reachable part of an implicit graph with BFS parent pointers"""

    def __init__(self, initial: Node, successors: SuccessorFn, node_budget: Optional[int] = None):
        self.initial = initial
        self.order: Dict[Node, int] = {initial: 0}
        self.parent: Dict[Node, Tuple[Node, int]] = {}
        self.adjacency: Dict[Node, List[Tuple[int, Node]]] = {}
        queue = deque([initial])
        while queue:
            node = queue.popleft()
            edges = list(successors(node))
            self.adjacency[node] = edges
            for letter, succ in edges:
                if succ not in self.order:
                    self.order[succ] = len(self.order)
                    self.parent[succ] = (node, letter)
                    if node_budget is not None and len(self.order) > node_budget:
                        raise BudgetExceededError("arena_budget", node_budget, len(self.order),
                                                  detail="lasso search")
                    queue.append(succ)

    @property
    def nodes(self) -> Iterable[Node]:
        return self.order.keys()

    def path_from_initial(self, target: Node) -> Tuple[List[int], List[Node]]:
        letters: List[int] = []
        nodes: List[Node] = []
        node = target
        while node != self.initial:
            pred, letter = self.parent[node]
            letters.append(letter)
            nodes.append(pred)
            node = pred
        letters.reverse()
        nodes.reverse()
        return letters, nodes

    def path_within(self, source: Node, target: Node, within: Set[Node],
                    nonempty: bool = False) -> Tuple[List[int], List[Node]]:
        """Shortest path source -> target using only nodes of ``within``"""
        if source == target and not nonempty:
            return [], []
        parent: Dict[Node, Tuple[Node, int]] = {}
        queue = deque()
        for letter, succ in self.adjacency[source]:
            if succ in within and succ not in parent:
                parent[succ] = (source, letter)
                queue.append(succ)
        while queue:
            node = queue.popleft()
            if node == target:
                break
            for letter, succ in self.adjacency[node]:
                if succ in within and succ not in parent:
                    parent[succ] = (node, letter)
                    queue.append(succ)
        if target not in parent:
            raise RuntimeError("target not reachable inside strongly connected set")
        letters: List[int] = []
        nodes: List[Node] = []
        node = target
        while True:
            pred, letter = parent[node]
            letters.append(letter)
            nodes.append(pred)
            node = pred
            if node == source:
                break
        letters.reverse()
        nodes.reverse()
        return letters, nodes


def find_lasso(
    initial: Node,
    successors: SuccessorFn,
    conditions: Sequence[LoopCondition],
    node_budget: Optional[int] = None,
    explored: Optional[ExploredGraph] = None,
) -> Optional[Lasso]:
    """
    Search an accepting lasso satisfying any of the given loop conditions.

    Args:
        initial: initial node
        successors: node -> iterable of (letter, successor)
        conditions: disjunction of loop conditions
        node_budget: optional limit on explored nodes
        explored: reuse an already explored graph

    Returns:
        Lasso or None
    """
    graph = explored or ExploredGraph(initial, successors, node_budget)
    for condition in conditions:
        lasso = _search_condition(graph, condition)
        if lasso is not None:
            return lasso
    return None


def _search_condition(graph: ExploredGraph, condition: LoopCondition) -> Optional[Lasso]:
    allowed = [v for v in graph.nodes if condition.allowed(v)]
    if not allowed:
        return None
    digraph = nx.DiGraph()
    digraph.add_nodes_from(allowed)
    allowed_set = set(allowed)
    for v in allowed:
        for _letter, succ in graph.adjacency[v]:
            if succ in allowed_set:
                digraph.add_edge(v, succ)

    pending: List[Set[Node]] = [allowed_set]
    while pending:
        nodes = pending.pop()
        for scc in nx.strongly_connected_components(digraph.subgraph(nodes)):
            if len(scc) == 1:
                (only,) = scc
                if not digraph.has_edge(only, only):
                    continue
            required: List[Node] = []
            removal: Optional[Set[Node]] = None
            dead = False
            for must_visit, forbid in condition.obligations:
                hits = [v for v in scc if must_visit(v)]
                if hits:
                    if forbid is None or any(forbid(v) for v in scc):
                        required.append(min(hits, key=graph.order.__getitem__))
                    continue
                if forbid is None:
                    dead = True
                    break
                forbidden = {v for v in scc if forbid(v)}
                if forbidden:
                    removal = forbidden
                    break
            if dead:
                continue
            if removal is not None:
                rest = set(scc) - removal
                if rest:
                    pending.append(rest)
                continue
            return _build_lasso(graph, set(scc), required)
    return None


def _build_lasso(graph: ExploredGraph, scc: Set[Node], required: List[Node]) -> Lasso:
    anchor = min(scc, key=graph.order.__getitem__)
    prefix, prefix_nodes = graph.path_from_initial(anchor)
    period: List[int] = []
    cycle_nodes: List[Node] = []
    current = anchor
    for waypoint in required:
        letters, nodes = graph.path_within(current, waypoint, scc)
        period += letters
        cycle_nodes += nodes
        current = waypoint
    letters, nodes = graph.path_within(current, anchor, scc)
    period += letters
    cycle_nodes += nodes
    if not period:
        period, cycle_nodes = graph.path_within(anchor, anchor, scc, nonempty=True)
    return Lasso(tuple(prefix), tuple(period), tuple(prefix_nodes), tuple(cycle_nodes))


# ============================================================================
# Acceptance conditions as loop conditions
# ============================================================================

def loop_conditions(acceptance: AcceptanceCondition,
                    project: Callable[[Node], int] = lambda node: node) -> List[LoopCondition]:
    """
    Loop conditions equivalent to an ω-acceptance condition.

    Args:
        acceptance: Büchi, coBüchi or Rabin condition
        project: maps a search node to the automaton state it carries

    Returns:
        list of alternatives (one per Rabin pair)
    """
    if isinstance(acceptance, Buchi):
        accepting = acceptance.accepting
        return [LoopCondition(obligations=[(lambda v: project(v) in accepting, None)])]
    if isinstance(acceptance, CoBuchi):
        accepting = acceptance.accepting
        return [LoopCondition(allowed=lambda v: project(v) in accepting)]
    if isinstance(acceptance, Rabin):
        conditions = []
        for pair in acceptance.pairs:
            good, bad = pair.good, pair.bad
            conditions.append(LoopCondition(
                allowed=lambda v, bad=bad: project(v) not in bad,
                obligations=[(lambda v, good=good: project(v) in good, None)],
            ))
        return conditions
    if isinstance(acceptance, FiniteReach):
        raise ValueError("finite-word acceptance has no loop condition")
    raise TypeError(f"unsupported acceptance condition: {acceptance!r}")
