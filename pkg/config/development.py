"""
Development Environment Configuration

Overrides for development environment.
"""

from .base import BaseConfig, Environment


class DevelopmentConfig(BaseConfig):
    """
    Development Configuration

    - Debug mode enabled
    - Verbose logging
    - Default budgets
    """

    # Override defaults for development
    environment: Environment = Environment.DEVELOPMENT
    debug: bool = True
    log_level: str = "DEBUG"


# Singleton instance
dev_config = DevelopmentConfig()
