"""
Unit Tests for Config Package

Tests the environment configurations and the budget bundle.
"""

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from config import Budgets, Environment, current_budgets, get_config, override_budgets
from config.base import BaseConfig
from config.development import DevelopmentConfig
from config.production import ProductionConfig
from config.testing import TestingConfig


class TestBaseConfig:
    """Test BaseConfig class"""

    def test_default_config_loads(self):
        """Default config loads without errors"""
        cfg = BaseConfig()

        assert cfg.app_name == "widthkit"
        assert cfg.environment is not None
        assert isinstance(cfg.state_budget, int)

    def test_default_budgets(self):
        """Budget defaults"""
        cfg = BaseConfig()

        assert cfg.state_budget == 50_000
        assert cfg.pruning_budget == 1_000_000
        assert cfg.ambiguity_budget == 10_000_000
        assert cfg.arena_budget == 2_000_000
        assert cfg.gc_max_vars == 20

    def test_sampling_defaults(self):
        cfg = BaseConfig()

        assert (cfg.sample_word_length, cfg.sample_prefix, cfg.sample_period) == (8, 2, 4)

    @patch.dict(os.environ, {"WIDTHKIT_STATE_BUDGET": "1234"})
    def test_budget_from_environment(self):
        """Budgets are read from WIDTHKIT_* variables"""
        assert BaseConfig().state_budget == 1234

    @patch.dict(os.environ, {"WIDTHKIT_ARENA_BUDGET": "0"})
    def test_invalid_budget_rejected(self):
        with pytest.raises(ValidationError):
            BaseConfig()

    def test_computed_properties(self):
        cfg = BaseConfig()

        assert isinstance(cfg.is_development, bool)
        assert isinstance(cfg.is_production, bool)
        assert isinstance(cfg.is_testing, bool)
        assert (cfg.test_data_dir / "far_a_m3.aut").exists()


class TestEnvironmentConfigs:
    """Test environment-specific configurations"""

    def test_development_config(self):
        cfg = DevelopmentConfig()

        assert cfg.environment == Environment.DEVELOPMENT
        assert cfg.debug is True
        assert cfg.log_level == "DEBUG"

    def test_production_config(self):
        """Production raises the construction and arena budgets"""
        cfg = ProductionConfig()

        assert cfg.environment == Environment.PRODUCTION
        assert cfg.debug is False
        assert cfg.state_budget == 200_000
        assert cfg.arena_budget == 10_000_000

    def test_testing_config(self):
        cfg = TestingConfig()

        assert cfg.environment == Environment.TESTING
        assert cfg.is_testing
        assert cfg.test_data_dir.name == "test_data"


class TestConfigFactory:
    """Test get_config() factory function"""

    def test_get_config_default(self):
        assert isinstance(get_config(), BaseConfig)

    @pytest.mark.parametrize("env,expected", [
        ("development", Environment.DEVELOPMENT),
        ("production", Environment.PRODUCTION),
        ("testing", Environment.TESTING),
        ("TESTING", Environment.TESTING),
    ])
    def test_get_config_by_name(self, env, expected):
        assert get_config(env).environment == expected

    @patch.dict(os.environ, {"WIDTHKIT_ENVIRONMENT": "production"})
    def test_get_config_from_env(self):
        """get_config() reads WIDTHKIT_ENVIRONMENT"""
        assert get_config().environment == Environment.PRODUCTION

    def test_singletons(self):
        assert get_config("testing") is get_config("testing")


class TestBudgets:
    """Test the budget bundle"""

    def test_from_config(self, prod_config):
        budgets = Budgets.from_config(prod_config)

        assert budgets.state_budget == 200_000
        assert budgets.gc_max_vars == prod_config.gc_max_vars

    def test_from_yaml_nested(self, tmp_path):
        """Keys under ``budgets`` override, the rest keep the base values"""
        path = tmp_path / "profile.yaml"
        path.write_text("budgets:\n  state_budget: 77\n  unknown_key: 3\n", encoding="utf-8")

        budgets = Budgets.from_yaml(path, base=Budgets())

        assert budgets.state_budget == 77
        assert budgets.pruning_budget == Budgets().pruning_budget

    def test_from_yaml_flat(self, tmp_path):
        path = tmp_path / "flat.yaml"
        path.write_text("gc_max_vars: 5\n", encoding="utf-8")

        assert Budgets.from_yaml(path, base=Budgets()).gc_max_vars == 5

    def test_from_yaml_rejects_non_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")

        with pytest.raises(ValueError):
            Budgets.from_yaml(path)

    def test_checked_in_profile(self, test_config):
        budgets = Budgets.from_yaml(test_config.configs_dir / "widthkit.yaml")

        assert budgets == Budgets()

    def test_override(self):
        """override_budgets installs and removes a process-wide profile"""
        custom = Budgets(state_budget=10)
        override_budgets(custom)
        assert current_budgets() is custom

        override_budgets(None)
        assert current_budgets().state_budget == get_config().state_budget
