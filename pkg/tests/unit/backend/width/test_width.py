"""
Unit Tests for width games, width reports and det-width
"""

import random

import pytest

from backend.common.errors import BudgetExceededError
from backend.core.determinize import minimize_dfa
from backend.core.families import a_n, far_a, l_n
from backend.core.generators import random_nfa
from backend.core.models import Alphabet, Automaton, Rabin, RabinPair
from backend.core.operations import sampled_equivalence, trivial_universal
from backend.gfg import gfg_check_nfa
from backend.width import (
    WIN,
    WidthGame,
    WidthMethod,
    config_moves,
    det_width,
    incremental_determinize_nfa,
    incremental_gfg_nca,
    initial_config,
    width_le,
    width_nca,
    width_nfa,
)


class TestPebbles:
    """Pebble configurations"""

    def test_initial_config(self):
        assert initial_config(3, 2, no_duplication=False) == (3,)
        assert initial_config(3, 2, no_duplication=True) == (3, 3)

    def test_subset_moves_largest_first(self, e1):
        assert config_moves(e1, (0,), 0, 2) == [(0, 1), (0,), (1,), ()]
        assert config_moves(e1, (0,), 0, 1) == [(0,), (1,), ()]

    def test_subset_dominance(self, e1):
        assert config_moves(e1, (0,), 0, 1, dominance=True) == [(0,), (1,)]
        assert config_moves(e1, (0,), 0, 2, dominance=True) == [(0, 1)]

    def test_pebble_moves(self, e1):
        moves = config_moves(e1, (0, 0), 0, 2, no_duplication=True)

        assert moves == [(0, 0), (0, 1), (1, 1), (0,), (1,), ()]

    def test_pebble_dominance_keeps_live_pebbles(self, e1):
        assert config_moves(e1, (0, 0), 0, 2, no_duplication=True, dominance=True) == [(0, 0), (0, 1), (1, 1)]

    def test_stuck_pebble_dies(self, e1):
        assert config_moves(e1, (1,), 0, 1, no_duplication=True) == [()]


class TestWidthGame:
    """Gw(A, k) as a safety arena"""

    def test_far_a_needs_two(self, far_a_m3):
        assert width_le(far_a_m3, 1) == (False, None)
        verdict, strategy = width_le(far_a_m3, 2)
        assert verdict
        assert strategy

    def test_strategy_moves_stay_inside_bound(self, far_a_m3):
        _, strategy = width_le(far_a_m3, 2)

        for (config, _d, sym), target in strategy.items():
            assert len(target) <= 2
            assert set(target) <= far_a_m3.post(config, sym)

    def test_universal_sink_collapses_to_win(self, two_state_universal):
        a = Automaton.from_edges(("a",), 2, 0, [(0, 0, 1), (1, 0, 1)], two_state_universal.acceptance)

        game = WidthGame(a, 1)
        assert game.arena.labels[0] != WIN
        assert WIN in game.arena.labels
        assert game.player0_wins

    def test_dominance_and_pebbles_agree_on_width(self):
        rng = random.Random(41)
        for _ in range(15):
            a = random_nfa(rng, 4)
            plain = width_nfa(a).width
            assert width_nfa(a, dominance=True).width == plain
            pebbles = width_nfa(a, no_duplication=True).width
            assert pebbles is None or pebbles >= plain

    def test_rejects_bad_input(self, finitely_many_b, e1):
        with pytest.raises(ValueError):
            WidthGame(finitely_many_b, 1)
        with pytest.raises(ValueError):
            WidthGame(e1, 0)

    def test_referee_must_be_deterministic(self, e1):
        with pytest.raises(ValueError):
            WidthGame(e1, 1, referee=e1)

    def test_arena_budget(self, far_a_m3):
        with pytest.raises(BudgetExceededError):
            WidthGame(far_a_m3, 2, arena_budget=5).player0_wins


class TestWidthNfa:
    """Least winning k"""

    @pytest.mark.parametrize("builder,expected", [
        (lambda: far_a(3), 2),
        (lambda: a_n(3), 4),
        (lambda: a_n(4), 5),
        (lambda: l_n(3), 3),
    ])
    def test_families(self, builder, expected):
        report = width_nfa(builder())

        assert report.width == expected
        assert report.method == WidthMethod.WIDTH_GAME
        assert [v.wins for v in report.verdicts] == [False] * (expected - 1) + [True]

    def test_two_state_universal(self, two_state_universal):
        assert width_nfa(two_state_universal).width == 1

    def test_e1(self, e1):
        assert width_nfa(e1).width == 2

    def test_width_one_is_gfg(self):
        rng = random.Random(43)
        for _ in range(20):
            a = random_nfa(rng, 3)
            assert (width_nfa(a).width == 1) == gfg_check_nfa(a)[0]

    def test_construction_sizes_recorded(self, far_a_m3):
        report = width_nfa(far_a_m3, with_construction=True)

        assert all(v.construction_states is not None for v in report.verdicts)
        assert report.verdict(2).construction_states < 2 ** 8

    def test_no_winner_in_range(self):
        report = width_nfa(a_n(3), max_k=2)

        assert report.width is None
        assert report.lower_bound == 3
        assert report.to_dict()["strategy_moves"] == 0

    def test_from_k(self, far_a_m3):
        report = width_nfa(far_a_m3, from_k=2)

        assert report.width == 2
        assert [v.k for v in report.verdicts] == [2]
        with pytest.raises(ValueError):
            width_nfa(far_a_m3, from_k=0)


class TestIncremental:
    """Incremental determinisation and GFG loops"""

    def test_far_a_minimises_to_m_plus_two(self, far_a_m3):
        report, dfa = incremental_determinize_nfa(far_a_m3)

        assert report.width == 2
        assert report.method == WidthMethod.K_SUBSET_GFG
        assert dfa.state_count == 5
        assert sampled_equivalence(dfa, far_a_m3, max_len=7) is None

    def test_a_n_reaches_minimal_dfa(self):
        report, dfa = incremental_determinize_nfa(a_n(3))

        assert report.width == 4
        assert dfa.state_count == 8
        assert minimize_dfa(dfa).state_count == 8

    def test_cobuchi_loop(self, finitely_many_b_cobuchi):
        report, ak = incremental_gfg_nca(finitely_many_b_cobuchi)

        assert report.width == 2
        assert report.method == WidthMethod.K_BREAKPOINT_GFG
        assert sampled_equivalence(ak, finitely_many_b_cobuchi) is None
        assert width_nca(finitely_many_b_cobuchi).width == 2

    def test_cobuchi_loop_requires_cobuchi(self, finitely_many_b):
        with pytest.raises(ValueError):
            incremental_gfg_nca(finitely_many_b)


class TestDetWidth:
    """Least k with a DBP k-construction"""

    def test_finite_words_match_width(self, far_a_m3, two_state_universal):
        assert det_width(far_a_m3) == 2
        assert det_width(two_state_universal) == 1

    def test_cobuchi(self, finitely_many_b_cobuchi):
        assert det_width(finitely_many_b_cobuchi) == 2

    def test_buchi(self, finitely_many_b):
        assert det_width(finitely_many_b) == 2

    def test_deterministic_rabin(self):
        d = Automaton.from_edges(Alphabet(("a",)), 1, 0, [(0, 0, 0)], Rabin((RabinPair({0}, set()),)))

        assert det_width(d) == 1

    def test_nondeterministic_rabin_rejected(self):
        a = Automaton.from_edges(Alphabet(("a",)), 2, 0, [(0, 0, 0), (0, 0, 1)], Rabin(()))

        with pytest.raises(ValueError):
            det_width(a)

    def test_budget_reports_refuted_bounds(self, far_a_m3):
        with pytest.raises(BudgetExceededError) as excinfo:
            det_width(far_a_m3, state_budget=1)

        assert excinfo.value.partial == []

    def test_universal_referee_accepted(self, two_state_universal):
        assert width_nfa(two_state_universal, referee=trivial_universal(two_state_universal.alphabet)).width == 1
