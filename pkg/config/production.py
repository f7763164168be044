"""
Production Environment Configuration

Overrides for production environment.
"""

from .base import BaseConfig, Environment


class ProductionConfig(BaseConfig):
    """
    Production Configuration

    - Debug mode disabled
    - INFO logging
    - Larger budgets for batch runs
    """

    # Override defaults for production
    environment: Environment = Environment.PRODUCTION
    debug: bool = False
    log_level: str = "INFO"

    state_budget: int = 200_000
    arena_budget: int = 10_000_000


# Singleton instance
prod_config = ProductionConfig()
