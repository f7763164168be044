"""
Base Configuration using Pydantic Settings

Centralized configuration for the widthkit library and CLI.
"""

from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(str, Enum):
    """Environment Types"""
    DEVELOPMENT = "development"
    PRODUCTION = "production"
    TESTING = "testing"


class BaseConfig(BaseSettings):
    """
    Base Configuration Class

    Reads from environment variables with WIDTHKIT_ prefix.
    Can be overridden by .env files in project root.
    """

    # ===== Application Settings =====
    app_name: str = Field(default="widthkit", alias="WIDTHKIT_APP_NAME")
    environment: Environment = Field(default=Environment.DEVELOPMENT, alias="WIDTHKIT_ENVIRONMENT")
    debug: bool = Field(default=False, alias="WIDTHKIT_DEBUG")
    log_level: str = Field(default="INFO", alias="WIDTHKIT_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="WIDTHKIT_LOG_FILE")

    # ===== Budgets =====
    state_budget: int = Field(default=50_000, ge=1, alias="WIDTHKIT_STATE_BUDGET")
    pruning_budget: int = Field(default=1_000_000, ge=1, alias="WIDTHKIT_PRUNING_BUDGET")
    ambiguity_budget: int = Field(default=10_000_000, ge=1, alias="WIDTHKIT_AMBIGUITY_BUDGET")
    arena_budget: int = Field(default=2_000_000, ge=1, alias="WIDTHKIT_ARENA_BUDGET")
    gc_max_vars: int = Field(default=20, ge=1, le=30, alias="WIDTHKIT_GC_MAX_VARS")

    # ===== Sampling (equivalence checks) =====
    sample_word_length: int = Field(default=8, ge=0, alias="WIDTHKIT_SAMPLE_WORD_LENGTH")
    sample_prefix: int = Field(default=2, ge=0, alias="WIDTHKIT_SAMPLE_PREFIX")
    sample_period: int = Field(default=4, ge=1, alias="WIDTHKIT_SAMPLE_PERIOD")

    # ===== File Paths =====
    project_root: Path = Field(default_factory=lambda: Path(__file__).parent.parent)
    test_data_dir: Path = Field(default_factory=lambda: Path(__file__).parent.parent / "test_data")
    configs_dir: Path = Field(default_factory=lambda: Path(__file__).parent.parent / "configs")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    # ===== Computed Properties =====
    @property
    def is_development(self) -> bool:
        """Check if running in development mode"""
        return self.environment == Environment.DEVELOPMENT

    @property
    def is_production(self) -> bool:
        """Check if running in production mode"""
        return self.environment == Environment.PRODUCTION

    @property
    def is_testing(self) -> bool:
        """Check if running in testing mode"""
        return self.environment == Environment.TESTING

    @property
    def budgets(self) -> "Budgets":
        """Budget bundle derived from this configuration"""
        return Budgets.from_config(self)


class Budgets(BaseModel):
    """
    Resource limits handed to the algorithms.

    A refusal to go beyond one of these limits surfaces as
    BudgetExceededError (CLI exit code 2).
    """
    state_budget: int = Field(50_000, ge=1, description="Max reachable states of a construction")
    pruning_budget: int = Field(1_000_000, ge=1, description="Max number of candidate prunings")
    ambiguity_budget: int = Field(10_000_000, ge=1, description="Max |Σ|^max_len for ambiguity profiles")
    arena_budget: int = Field(2_000_000, ge=1, description="Max positions of a game arena")
    gc_max_vars: int = Field(20, ge=1, le=30, description="Max |V| for solve_gc")

    @classmethod
    def from_config(cls, cfg: BaseConfig) -> "Budgets":
        return cls(
            state_budget=cfg.state_budget,
            pruning_budget=cfg.pruning_budget,
            ambiguity_budget=cfg.ambiguity_budget,
            arena_budget=cfg.arena_budget,
            gc_max_vars=cfg.gc_max_vars,
        )

    @classmethod
    def from_yaml(cls, path: Union[str, Path], base: Optional["Budgets"] = None) -> "Budgets":
        """
        Lädt ein Budget-Profil aus YAML.

        Keys missing from the file keep the values of ``base``
        (or the active configuration).

        Args:
            path: YAML file with a top-level ``budgets`` mapping (or flat keys)
            base: Budgets to start from

        Returns:
            Budgets: merged budget bundle
        """
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Budget profile must be a mapping: {path}")
        data = data.get("budgets", data)

        merged = (base or current_budgets()).model_dump()
        merged.update({k: v for k, v in data.items() if k in merged})
        return cls(**merged)


# ===== Global Config Factory =====
@lru_cache(maxsize=1)
def get_config() -> BaseConfig:
    """
    Get cached configuration instance.

    Returns:
        BaseConfig: Cached configuration object
    """
    return BaseConfig()


def current_budgets() -> Budgets:
    """Installed budget override, else the budgets of the configuration selected by WIDTHKIT_ENVIRONMENT"""
    if _budget_override is not None:
        return _budget_override
    from config import get_config as get_env_config
    return get_env_config().budgets


_budget_override: Optional[Budgets] = None


def override_budgets(budgets: Optional[Budgets]) -> None:
    """Install (or with None, remove) a process-wide budget profile, e.g. from ``--config``"""
    global _budget_override
    _budget_override = budgets
