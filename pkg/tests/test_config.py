"""Tests for config and logging_setup modules."""

import logging

import pytest
from pydantic import ValidationError
from rich.logging import RichHandler

# functions to test
from spancomplete.config import RunConfig
from spancomplete.logging_setup import configure_logging

# -----------------------------------------------------------------------------
# 1. Tests for 'RunConfig'
# -----------------------------------------------------------------------------


def test_run_config_defaults(monkeypatch):
    """Test defaults when no environment variable is set."""
    for name in ("SEED", "SAMPLES", "DIM", "N_JOBS", "LOG_LEVEL"):
        monkeypatch.delenv(f"SPANCOMPLETE_{name}", raising=False)
    config = RunConfig.from_env()
    assert config == RunConfig()
    assert config.samples == 100
    assert config.log_level == "WARNING"


def test_run_config_reads_environment(monkeypatch):
    """Test environment strings are validated into typed settings."""
    monkeypatch.setenv("SPANCOMPLETE_SEED", "7")
    monkeypatch.setenv("SPANCOMPLETE_DIM", "3")
    monkeypatch.setenv("SPANCOMPLETE_LOG_LEVEL", "DEBUG")
    config = RunConfig.from_env()
    assert (config.seed, config.dim, config.log_level) == (7, 3, "DEBUG")


def test_run_config_overrides_win(monkeypatch):
    """Test explicit overrides beat the environment and None is ignored."""
    monkeypatch.setenv("SPANCOMPLETE_N_JOBS", "4")
    config = RunConfig.from_env(n_jobs=1, seed=None)
    assert config.n_jobs == 1
    assert config.seed == 0


@pytest.mark.parametrize(
    "overrides",
    [{"samples": 0}, {"dim": -1}, {"log_level": "LOUD"}],
)
def test_run_config_rejects_bad_values(overrides):
    """Test out of range settings raise a ValidationError."""
    with pytest.raises(ValidationError):
        RunConfig.from_env(**overrides)


# -----------------------------------------------------------------------------
# 2. Tests for 'configure_logging'
# -----------------------------------------------------------------------------


def test_configure_logging_installs_rich_handler():
    """Test the package logger gets one rich handler and stops there."""
    logger = configure_logging("DEBUG")
    configure_logging("DEBUG")
    assert logger.name == "spancomplete"
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0], RichHandler)
    assert logger.level == logging.DEBUG
    assert not logger.propagate
