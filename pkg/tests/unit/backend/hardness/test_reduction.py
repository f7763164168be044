"""
Unit Tests for the G_c to width reduction
"""

import pytest

from backend.core.operations import is_complete, is_deterministic, is_universal
from backend.hardness import (
    CLayout,
    GcInstance,
    Literal,
    build_b,
    build_c,
    build_reduction,
    clause,
    literal_state,
    reduction_alphabet,
    reduction_width_le,
    running_example,
    solve_gc,
)
from backend.hardness.reduction import B_INITIAL, B_TOP


@pytest.fixture
def instance():
    return running_example()


class TestAlphabet:

    def test_running_example_letters(self, instance):
        alphabet = reduction_alphabet(instance)

        assert len(alphabet) == 26
        assert alphabet.symbols[:3] == ("a", "f_t", "a_x")
        assert "f_z" in alphabet.symbols and "f_-z" in alphabet.symbols
        assert "f_x" not in alphabet.symbols
        assert alphabet.symbols[-4:] == ("e_x", "e_y", "e_z", "e_t")


class TestAutomatonB:
    """Literal gadget"""

    def test_size_and_safety(self, instance):
        b = build_b(instance)

        assert b.state_count == 10
        assert b.safety
        assert b.accepting == frozenset(range(10))

    def test_literal_states(self, instance):
        assert literal_state(instance, Literal("x")) == 2
        assert literal_state(instance, Literal("x", False)) == 3
        assert literal_state(instance, Literal("t", False)) == 9

    def test_a_spreads_over_literals(self, instance):
        b = build_b(instance)

        assert b.transitions[B_INITIAL][b.alphabet.index("a")] == frozenset(range(2, 10))

    def test_player0_literals_branch_on_a(self, instance):
        b = build_b(instance)
        a = b.alphabet.index("a")

        assert b.transitions[literal_state(instance, Literal("x"))][a] == frozenset({2, 3})
        assert b.transitions[literal_state(instance, Literal("z"))][a] == frozenset({6})
        assert b.transitions[literal_state(instance, Literal("t"))][a] == frozenset({9})

    def test_negated_literal_escapes_to_top(self, instance):
        b = build_b(instance)
        q_x = literal_state(instance, Literal("x"))

        assert b.transitions[q_x][b.alphabet.index("a_-x")] == frozenset({B_TOP})
        assert b.transitions[q_x][b.alphabet.index("a_y")] == frozenset({q_x})
        assert b.transitions[q_x][b.alphabet.index("c_1")] == frozenset({B_TOP})
        assert b.transitions[q_x][b.alphabet.index("c_2")] == frozenset()

    def test_top_is_universal_sink(self, instance):
        b = build_b(instance)

        assert all(b.transitions[B_TOP][sym] == frozenset({B_TOP}) for sym in b.alphabet.indices)


class TestAutomatonC:
    """Letter-order DFA"""

    def test_layout(self, instance):
        layout = CLayout(instance)

        assert layout.size == 11
        assert layout.types == {2: 1, 7: 0, 8: 1}
        assert len(layout.labels) == 11

    def test_complete_dfa(self, instance):
        c = build_c(instance)

        assert c.state_count == 11
        assert is_deterministic(c) and is_complete(c)

    def test_no_player1_variables(self):
        instance = GcInstance(("x",), (), (clause("x", "-x", "t", "-t"),), {"x": False, "t": False})

        c = build_c(instance)
        assert c.state_count == CLayout(instance).size
        assert is_complete(c)


class TestReduction:
    """Product automaton A and its width bound"""

    def test_running_example_is_universal(self, instance):
        a, k = build_reduction(instance)

        assert k == 4
        assert len(a.alphabet) == 26
        assert a.safety
        assert is_universal(a)

    def test_tautology_is_won_by_player0(self):
        instance = GcInstance(("x",), ("z",), (clause("t", "-t", "x", "z"),),
                              {"x": True, "z": True, "t": True})
        a, k = build_reduction(instance)

        assert solve_gc(instance)[0] == 0
        assert k == 3
        assert reduction_width_le(a, k)

    def test_turn_clause_is_won_by_player1(self):
        instance = GcInstance(("x",), ("z",), (clause("t", "t", "t", "t"),),
                              {"x": True, "z": True, "t": True})
        a, k = build_reduction(instance)

        assert solve_gc(instance)[0] == 1
        assert not reduction_width_le(a, k)
