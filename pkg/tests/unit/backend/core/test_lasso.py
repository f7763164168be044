"""
Unit Tests for the lasso search engine
"""

import pytest

from backend.common.errors import BudgetExceededError
from backend.core.lasso import LoopCondition, find_lasso, loop_conditions
from backend.core.models import Buchi, FiniteReach


def ring(n):
    """Cycle 0 -> 1 -> ... -> n-1 -> 0, letter = source node"""
    return lambda v: [(v, (v + 1) % n)]


class TestFindLasso:
    """Obligations on the cycle part"""

    def test_must_visit(self):
        lasso = find_lasso(0, ring(3), [LoopCondition(obligations=[(lambda v: v == 2, None)])])

        assert lasso is not None
        assert 2 in lasso.cycle_nodes
        assert len(lasso.period) == 3

    def test_allowed_excludes_cycle(self):
        assert find_lasso(0, ring(3), [LoopCondition(allowed=lambda v: v != 1)]) is None

    def test_streett_obligation_refines_scc(self):
        """Visit 0 or avoid 1: the self-loop on 2 survives once 1 is removed"""
        def successors(v):
            return {0: [(0, 1)], 1: [(0, 2)], 2: [(0, 2), (1, 1)]}[v]

        condition = LoopCondition(allowed=lambda v: v != 0, obligations=[(lambda v: v == 0, lambda v: v == 1)])
        lasso = find_lasso(0, successors, [condition])

        assert lasso is not None
        assert set(lasso.cycle_nodes) == {2}

    def test_node_budget(self):
        with pytest.raises(BudgetExceededError):
            find_lasso(0, lambda v: [(0, v + 1)], [LoopCondition()], node_budget=50)


class TestLoopConditions:
    """Acceptance conditions as loop conditions"""

    def test_buchi(self):
        (condition,) = loop_conditions(Buchi({1}))

        assert find_lasso(0, ring(2), [condition]) is not None

    def test_finite_has_none(self):
        with pytest.raises(ValueError):
            loop_conditions(FiniteReach({0}))
