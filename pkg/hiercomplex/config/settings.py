"""
Runtime settings for builds and lemma checks.

Values come from ``HIERCOMPLEX_*`` environment variables or a ``.env`` file:

    HIERCOMPLEX_SEED=7 HIERCOMPLEX_REDUCE_BUDGET=100000 hiercomplex check --level 4
"""
import logging
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class SuiteSettings(BaseSettings):
    """Budgets, seeds and sample sizes shared by the CLI and the lemma suite."""

    model_config = SettingsConfigDict(
        env_prefix="HIERCOMPLEX_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = Field(default="INFO", description="Root logging level")
    seed: int = Field(default=0, description="Base seed for every sampled experiment")
    closure_budget: int = Field(
        default=1_000_000, ge=1, description="Paths visited by an exhaustive flip closure"
    )
    reduce_budget: int = Field(
        default=20_000, ge=1, description="Paths visited by one null-form search"
    )
    push_budget: int = Field(
        default=20_000, ge=1, description="Paths visited by one push onto a tile boundary"
    )
    samples_per_lemma: int = Field(
        default=4, ge=0, description="Sampled paths per level in the reduction lemmas"
    )
    geodesic_cap: int = Field(
        default=100_000, ge=1, description="Largest geodesic count reported exactly"
    )
    ellipticity_samples: int = Field(
        default=200, ge=0, description="Random pairs in the geodesics scan"
    )
    workers: int = Field(default=1, ge=1, description="Lemma experiments run concurrently")
    degree_levels: int = Field(
        default=0,
        ge=0,
        description="Highest level built for the degree check; 0 uses the checked level",
    )
    metric_sample_pairs: int = Field(
        default=1000, ge=1, description="Sampled pairs for the pasting metric check above level 4"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is a valid Python logging level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v.upper()


_settings: Optional[SuiteSettings] = None


def get_settings() -> SuiteSettings:
    """Get the process-wide settings instance."""
    global _settings
    if _settings is None:
        _settings = SuiteSettings()
        logger.debug("Loaded settings: %s", _settings.model_dump())
    return _settings
