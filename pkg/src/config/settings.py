"""
Application settings and configuration management.

Uses Pydantic Settings for type-safe, validated numerical defaults.
"""

from typing import Tuple

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Numerical and reproduction defaults.

    Only explicit keyword arguments override a field. Environment variables
    and dotenv files are not consulted, so an invocation is fully described
    by its command-line flags.

    Example:
        >>> Settings(default_grid_steps=2000).default_grid_steps
        2000
    """

    # Series truncation
    series_tol: float = Field(default=1e-14, gt=0.0, lt=1.0)
    series_max_terms: int = Field(default=100_000, ge=1)
    # 2F1 points above this go to scipy.special.hyp2f1 (1 - x transformation)
    hyp2f1_series_max_x: float = Field(default=0.9, gt=0.0, le=1.0)

    # Discretization
    default_grid_steps: int = Field(default=1000, ge=2)
    boundary_tolerance: float = Field(default=1e-6, gt=0.0)
    residual_window: Tuple[float, float] = (0.1, 0.9)

    # C-RL closed form exists only above this order
    crl_order_threshold: float = 0.5

    # Table reproduction
    table_alphas: Tuple[float, ...] = (1.0, 0.95, 0.9, 0.8, 0.7, 0.55, 0.4)
    table_m_sweep: Tuple[int, ...] = (100, 200, 500, 1000)

    # Figure data
    figure_grid_steps: int = Field(default=200, ge=2)

    # Output
    output_dir: str = "output"
    csv_float_format: str = "%.12e"
    max_workers: int = Field(default=1, ge=1)  # >1 evaluates table cells in a thread pool

    model_config = SettingsConfigDict(frozen=True)

    @field_validator("residual_window")
    @classmethod
    def _check_window(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        lo, hi = value
        if not 0.0 <= lo < hi <= 1.0:
            raise ValueError(f"residual_window must satisfy 0 <= lo < hi <= 1, got {value}")
        return value

    @field_validator("table_alphas")
    @classmethod
    def _check_alphas(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if not value or any(not 0.0 < a <= 1.0 for a in value):
            raise ValueError("table_alphas must be a nonempty list of orders in (0, 1]")
        return value

    @field_validator("table_m_sweep")
    @classmethod
    def _check_sweep(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value or any(m < 2 for m in value):
            raise ValueError("table_m_sweep must be a nonempty list of grid sizes >= 2")
        return value

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        return (init_settings,)


# Singleton instance
settings = Settings()
