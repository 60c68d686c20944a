"""Tests for settings and logging setup."""

import logging

import pytest
from pydantic import ValidationError

from rigikit.config import Settings
from rigikit.logging_config import configure_logging


class TestSettings:
    """Test environment driven settings."""

    def test_defaults(self):
        """Test the documented defaults."""
        settings = Settings()
        assert settings.threads >= 1
        assert settings.default_dimensions == [2, 3]
        assert settings.schema_version == "1"

    def test_enumeration_limits(self):
        """Test the guard chosen for each degree."""
        settings = Settings()
        assert settings.enumeration_limit(3) == 14
        assert settings.enumeration_limit(4) == 12
        assert settings.enumeration_limit(7) == 10
        assert settings.enumeration_limit(5, bipartite=True) == 14

    def test_environment(self, monkeypatch):
        """Test RIGIKIT_ prefixed overrides."""
        monkeypatch.setenv("RIGIKIT_THREADS", "4")
        monkeypatch.setenv("RIGIKIT_CUBIC_MAX_N", "16")
        settings = Settings()
        assert settings.threads == 4
        assert settings.enumeration_limit(3) == 16

    def test_validation(self, monkeypatch):
        """Test rejected values."""
        monkeypatch.setenv("RIGIKIT_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings()
        with pytest.raises(ValidationError):
            Settings(threads=1, default_dimensions=[2, 9])


class TestLogging:
    """Test the stderr handler."""

    def test_single_handler(self):
        """Test repeated setup keeps one handler and stops propagation."""
        configure_logging("INFO")
        configure_logging("DEBUG")
        logger = logging.getLogger("rigikit")
        handlers = [h for h in logger.handlers if getattr(h, "_rigikit", False)]
        assert len(handlers) == 1
        assert logger.level == logging.DEBUG
        assert logger.propagate is False
