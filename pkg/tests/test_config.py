"""Unit tests for the dl_cospectral settings layer."""

import pytest

from dl_cospectral.core.config import DEFAULTS, PACKAGE_NAME, ToolkitSettings, settings
from dl_cospectral.core.exceptions import ImproperlyConfigured


class TestToolkitSettings:
    """Unit tests for the ToolkitSettings class."""

    def test_defaults(self):
        """Test that unset settings fall back to the defaults."""
        assert settings.DL_ORDER_CAP == DEFAULTS["DL_ORDER_CAP"]
        assert settings.DL_CANONICAL_LIMIT == 32
        assert settings.DL_CENSUS_TMPDIR == ""

    def test_unknown_setting(self):
        """Test that unknown names raise AttributeError."""
        with pytest.raises(AttributeError, match="Invalid setting"):
            settings.DL_NOT_A_SETTING

    def test_environment_override(self, monkeypatch):
        """Test that environment variables are read and cast to the default's type."""
        # Arrange
        monkeypatch.setenv("DL_PLANARITY_LIMIT", "12")
        monkeypatch.setenv("DL_EIGEN_TOLERANCE", "1e-7")

        # Act
        settings.reload()

        # Assert
        assert settings.DL_PLANARITY_LIMIT == 12
        assert settings.DL_EIGEN_TOLERANCE == pytest.approx(1e-7)

    def test_configure_beats_environment(self, monkeypatch):
        """Test that explicit overrides take precedence over the environment."""
        monkeypatch.setenv("DL_ORDER_CAP", "20")
        settings.configure(DL_ORDER_CAP=30)

        assert settings.DL_ORDER_CAP == 30

    def test_configure_ignores_none(self):
        """Test that None values leave a setting untouched."""
        settings.configure(DL_ORDER_CAP=None)

        assert settings.DL_ORDER_CAP == DEFAULTS["DL_ORDER_CAP"]

    def test_configure_casts_to_default_type(self):
        """Test that overrides are cast to the type of the default."""
        settings.configure(DL_WITNESS_LIMIT="5")

        assert settings.DL_WITNESS_LIMIT == 5

    def test_configure_unknown_setting(self):
        """Test that configuring an unknown name raises ImproperlyConfigured."""
        with pytest.raises(ImproperlyConfigured, match="Unknown setting"):
            settings.configure(DL_NOPE=1)

    def test_configure_rejects_non_positive(self):
        """Test that a non-positive limit is rejected."""
        with pytest.raises(ImproperlyConfigured, match="DL_CENSUS_SHARDS"):
            settings.configure(DL_CENSUS_SHARDS=0)

    def test_reset(self):
        """Test that reset drops every override."""
        settings.configure(DL_CANONICAL_LIMIT=10)
        settings.reset()

        assert settings.DL_CANONICAL_LIMIT == 32

    def test_invalid_environment_fails_validation(self, monkeypatch):
        """Test that a fresh settings object validates environment values."""
        monkeypatch.setenv("DL_ORDER_CAP", "-3")

        with pytest.raises(ImproperlyConfigured, match="DL_ORDER_CAP"):
            ToolkitSettings(PACKAGE_NAME, defaults=DEFAULTS, positive_settings={"DL_ORDER_CAP"})

    def test_package_name_required(self):
        """Test that a package name must be given."""
        with pytest.raises(ValueError):
            ToolkitSettings("")
