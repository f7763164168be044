"""
Unit Tests for G_c instances and the G_c solver
"""

import random

import pytest

from backend.common.errors import BudgetExceededError
from backend.hardness import GcInstance, Literal, clause, gc_moves, random_gc_instance, running_example, solve_gc


@pytest.fixture
def turn_only_loses():
    """φ = t: every Player-0 move sets t to false"""
    return GcInstance((), ("z",), (clause("t", "t", "t", "t"),), {"z": True, "t": True})


class TestLiteral:

    def test_parse_and_negate(self):
        lit = Literal.parse("-x")

        assert lit == Literal("x", False)
        assert lit.negation == Literal("x")
        assert str(lit) == "-x"
        assert lit.holds(False) and not lit.holds(True)


class TestGcInstance:
    """Instances and valuations"""

    def test_running_example(self):
        instance = running_example()

        assert instance.variables == ("x", "y", "z", "t")
        assert instance.initial_valuation == (True, True, True, True)
        assert instance.evaluate(instance.initial_valuation)
        assert instance.owned(1) == ("z",)

    def test_evaluate(self):
        instance = running_example()

        assert not instance.evaluate((True, False, True, True))
        assert instance.evaluate((False, False, False, False)) is False
        assert instance.evaluate((False, True, False, False))

    @pytest.mark.parametrize("vars0,vars1,clauses,alpha", [
        (("t",), (), (), {"t": True}),
        (("x",), ("x",), (), {"x": True, "t": True}),
        (("x",), (), (clause("x", "x", "x"),), {"x": True, "t": True}),
        (("x",), (), (clause("x", "x", "x", "w"),), {"x": True, "t": True}),
        (("x",), (), (), {"t": True}),
    ])
    def test_invalid(self, vars0, vars1, clauses, alpha):
        with pytest.raises(ValueError):
            GcInstance(vars0, vars1, clauses, alpha)

    def test_to_dict(self):
        data = running_example().to_dict()

        assert data["clauses"][1] == ["-x", "y", "-z", "-t"]
        assert data["alpha_init"] == {"x": 1, "y": 1, "z": 1, "t": 1}


class TestSolveGc:
    """Safety game on (τ, α)"""

    def test_moves_set_turn(self):
        instance = running_example()
        moves = gc_moves(instance, 0, instance.initial_valuation)

        assert moves == [
            (False, False, True, False),
            (False, True, True, False),
            (True, False, True, False),
            (True, True, True, False),
        ]
        assert gc_moves(instance, 1, instance.initial_valuation) == [
            (True, True, False, True),
            (True, True, True, True),
        ]

    def test_running_example_player0_wins(self):
        winner, strategy = solve_gc(running_example())

        assert winner == 0
        assert strategy
        for (player, _alpha), target in strategy.items():
            assert player == 0
            assert running_example().evaluate(target)

    def test_player1_wins(self, turn_only_loses):
        winner, _ = solve_gc(turn_only_loses)

        assert winner == 1

    def test_variable_budget(self):
        with pytest.raises(BudgetExceededError) as excinfo:
            solve_gc(running_example(), max_vars=3)

        assert excinfo.value.observed == 4

    def test_random_instances_are_valid(self):
        rng = random.Random(71)
        for _ in range(10):
            instance = random_gc_instance(rng, vars0=2, vars1=1, clauses=3)
            assert instance.validate() == []
            assert solve_gc(instance)[0] in (0, 1)
