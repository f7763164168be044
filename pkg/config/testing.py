"""
Testing Environment Configuration

Overrides for testing environment.
"""

from pathlib import Path

from .base import BaseConfig, Environment


class TestingConfig(BaseConfig):
    """
    Testing Configuration

    - Debug mode enabled
    - Fixture paths under test_data/
    - Default budgets (the acceptance corpora are sized against them)
    """

    # Override defaults for testing
    environment: Environment = Environment.TESTING
    debug: bool = True
    log_level: str = "DEBUG"

    # Test-specific paths
    test_data_dir: Path = Path(__file__).parent.parent / "test_data"


# Singleton instance
test_config = TestingConfig()
