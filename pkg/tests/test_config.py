"""Tests for settings validation and the error hierarchy."""

import pytest
from pydantic import ValidationError

from src.config import Settings, settings
from src.errors import (
    DivergenceError,
    DomainError,
    FracVarError,
    GridTooCoarseError,
    InputFormatError,
    NonConvergenceError,
    SolutionNotExistError,
)


def test_defaults():
    assert settings.series_tol == 1e-14
    assert settings.series_max_terms == 100_000
    assert settings.default_grid_steps == 1000
    assert settings.table_alphas == (1.0, 0.95, 0.9, 0.8, 0.7, 0.55, 0.4)
    assert settings.crl_order_threshold == 0.5


def test_environment_is_ignored(monkeypatch):
    monkeypatch.setenv("DEFAULT_GRID_STEPS", "7")
    assert Settings().default_grid_steps == 1000


@pytest.mark.parametrize("overrides", [
    {"series_tol": 0.0},
    {"series_tol": 1.0},
    {"residual_window": (0.9, 0.1)},
    {"table_alphas": (0.5, 1.5)},
    {"table_m_sweep": (1, 10)},
    {"default_grid_steps": 1},
])
def test_rejects_invalid(overrides):
    with pytest.raises(ValidationError):
        Settings(**overrides)


def test_frozen():
    with pytest.raises(ValidationError):
        settings.series_tol = 1e-3


def test_error_hierarchy():
    for cls in (DivergenceError, GridTooCoarseError, SolutionNotExistError):
        assert issubclass(cls, DomainError)
    assert issubclass(DomainError, ValueError)
    assert issubclass(InputFormatError, FracVarError)

    err = NonConvergenceError("stalled", terms=42)
    assert err.terms == 42
    assert isinstance(err, RuntimeError)

    missing = SolutionNotExistError(0.4)
    assert missing.alpha == 0.4
    assert str(missing) == "solution does not exist for alpha <= 0.5"
