"""
Integration Tests for finite-word width

Test Categories:
1. Example families (width, determinisation sizes)
2. Ambiguity versus width
3. Fan subset sizes
4. Agreement of the width characterisations on a seeded corpus
"""

import random
from math import comb

import pytest

from backend.constructions import k_subset
from backend.core import max_ambiguity_profile, minimize_dfa, subset_construction
from backend.core.families import a_n, far_a, fan, l_n
from backend.core.generators import random_nfa
from backend.core.operations import is_universal, trivial_universal
from backend.gfg import gfg_check_nfa
from backend.sim import decide_sim, width_via_sim
from backend.width import incremental_determinize_nfa, width_le, width_nfa
from shared.formats import load_automaton

pytestmark = pytest.mark.integration


# ============================================================================
# Fixtures
# ============================================================================

@pytest.fixture(scope="module")
def nfa_corpus():
    """200 seeded NFAs, 1..5 states over one or two letters"""
    rng = random.Random(20240601)
    return [random_nfa(rng, rng.randint(1, 5), rng.randint(1, 2)) for _ in range(200)]


# ============================================================================
# Test Cases
# ============================================================================

class TestFarA:
    """Σ*aΣ^{≥m} with m = 3"""

    def test_width_and_determinisation(self, fixtures_dir):
        a = load_automaton(fixtures_dir / "far_a_m3.aut")

        assert width_nfa(a).width == 2
        report, dfa = incremental_determinize_nfa(a)
        assert report.width == 2
        assert dfa.state_count == 5
        assert k_subset(a, 2).state_count < 2 ** a.state_count

    @pytest.mark.parametrize("m", [1, 2, 4])
    def test_other_members(self, m):
        _, dfa = incremental_determinize_nfa(far_a(m))

        assert dfa.state_count == m + 2


class TestAmbiguityTriptych:
    """Width against ambiguity"""

    def test_exponentially_ambiguous_width_one(self, fixtures_dir):
        a = load_automaton(fixtures_dir / "universal2.aut")

        assert width_nfa(a).width == 1
        assert max_ambiguity_profile(a, 8) == [(length, 2 ** length) for length in range(9)]

    @pytest.mark.parametrize("n", [3, 4])
    def test_unambiguous_width_n_plus_one(self, n):
        a = a_n(n)

        assert width_nfa(a).width == n + 1
        assert all(best <= 1 for _, best in max_ambiguity_profile(a, 10))
        assert minimize_dfa(subset_construction(a)).state_count == 2 ** n

    def test_fixture_matches_family(self, fixtures_dir):
        assert list(load_automaton(fixtures_dir / "a3.aut").edges()) == list(a_n(3).edges())

    def test_l_n(self):
        a = l_n(3)

        assert width_nfa(a).width == 3
        assert minimize_dfa(subset_construction(a)).state_count == 7


class TestFan:
    """Subset versus k-subset sizes"""

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_sizes(self, n):
        a = fan(n)

        assert subset_construction(a).state_count == 3
        assert k_subset(a, 2).state_count == comb(n, 2) + 2

    def test_fixture(self, fixtures_dir):
        assert subset_construction(load_automaton(fixtures_dir / "fan_n3.aut")).state_count == 3


@pytest.mark.slow
class TestWidthCharacterisations:
    """Width game, k-subset GFG and simulation against the determinisation"""

    def test_corpus_agrees_for_every_k(self, nfa_corpus):
        for index, a in enumerate(nfa_corpus):
            det = subset_construction(a)
            universal = is_universal(a)
            for k in range(1, a.state_count + 1):
                game = width_le(a, k)[0]
                assert gfg_check_nfa(k_subset(a, k))[0] == game, f"automaton {index}, k={k}"
                assert decide_sim(det, a, k) == game, f"automaton {index}, k={k}"
                if universal:
                    assert decide_sim(trivial_universal(a.alphabet), a, k) == game
                assert width_via_sim(a, k) == game
