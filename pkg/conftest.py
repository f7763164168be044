# Fügt Projektwurzel und src/ dem sys.path hinzu für Tests ohne Installation als Paket
import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
for entry in (ROOT, ROOT / "src"):
    if str(entry) not in sys.path:
        sys.path.insert(0, str(entry))


# ===== Environment Setup for Tests =====
@pytest.fixture(scope="session", autouse=True)
def setup_test_environment():
    """
    Set up test environment variables.
    Runs once per test session automatically.
    """
    os.environ["WIDTHKIT_ENVIRONMENT"] = "testing"
    os.environ["WIDTHKIT_LOG_LEVEL"] = "DEBUG"

    yield


@pytest.fixture(autouse=True)
def reset_budget_override():
    """No budget profile leaks from one test into the next"""
    from config import override_budgets
    override_budgets(None)
    yield
    override_budgets(None)


# ===== Config Fixtures =====
@pytest.fixture
def test_config():
    """Provide testing configuration"""
    from config import get_config
    return get_config("testing")


@pytest.fixture
def dev_config():
    """Provide development configuration"""
    from config import get_config
    return get_config("development")


@pytest.fixture
def prod_config():
    """Provide production configuration"""
    from config import get_config
    return get_config("production")


# ===== Automaton Fixtures =====
@pytest.fixture
def e1():
    from backend.core.families import e1
    return e1()


@pytest.fixture
def far_a_m3():
    from backend.core.families import far_a
    return far_a(3)


@pytest.fixture
def two_state_universal():
    from backend.core.families import two_state_universal
    return two_state_universal()


@pytest.fixture
def finitely_many_b():
    """Büchi NFA for 'eventually only a': 0 -a,b-> 0, 0 -a-> 1, 1 -a-> 1, F = {1}"""
    from backend.core.models import Alphabet, Automaton, Buchi, WordMode
    return Automaton.from_edges(Alphabet(("a", "b")), 2, 0, [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)],
                                Buchi({1}), WordMode.INFINITE)


@pytest.fixture
def finitely_many_b_cobuchi(finitely_many_b):
    """Same transitions read as a coBüchi automaton (same language)"""
    from backend.core.models import Automaton, CoBuchi
    return Automaton.from_edges(finitely_many_b.alphabet, 2, 0, finitely_many_b.edges(), CoBuchi({1}))


@pytest.fixture
def infinitely_many_a():
    """Deterministic Büchi automaton: state 1 after every a, F = {1}"""
    from backend.core.models import Alphabet, Automaton, Buchi
    return Automaton.from_edges(Alphabet(("a", "b")), 2, 0, [(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)],
                                Buchi({1}))


# ===== Path Fixtures =====
@pytest.fixture
def fixtures_dir():
    """Directory with the checked-in fixture files"""
    return ROOT / "test_data"


@pytest.fixture
def test_output_dir(tmp_path):
    """Provide a temporary directory for test outputs"""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    return output_dir


# ===== Pytest Configuration =====
def pytest_configure(config):
    """Configure pytest with custom markers"""
    config.addinivalue_line(
        "markers", "unit: Unit tests (fast, isolated)"
    )
    config.addinivalue_line(
        "markers", "integration: Integration tests (cross-module checks, fixture files)"
    )
    config.addinivalue_line(
        "markers", "e2e: End-to-end tests (CLI)"
    )
    config.addinivalue_line(
        "markers", "slow: Slow tests (full-size seeded corpora)"
    )
