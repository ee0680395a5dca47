"""Configuration management for dl_cospectral."""

from typing import Any, Dict, Set

import environ

from dl_cospectral.core.exceptions import ImproperlyConfigured

PACKAGE_NAME = "dl_cospectral"

env = environ.Env()

if env.str("DL_ENV_FILE", default=""):
    environ.Env.read_env(env.str("DL_ENV_FILE"))


class ToolkitSettings:
    """
    A settings object that allows toolkit settings to be accessed as properties.

    Example:
        from dl_cospectral.core.config import settings
        print(settings.DL_EIGEN_TOLERANCE)

    Values come from explicit overrides first (see ``configure``), then from
    environment variables of the same name, then from the defaults.
    """

    def __init__(
        self,
        package_name: str = None,
        defaults: Dict[str, Any] | None = None,
        positive_settings: Set[str] | None = None,
    ) -> None:
        if not package_name:
            raise ValueError("Package name must be provided")
        self.package_name = package_name
        self.defaults = defaults or {}
        self.positive_settings = positive_settings or set()
        self._overrides: Dict[str, Any] = {}
        self._cached_attrs = set()
        self.validate()

    def __getattr__(self, attr) -> Any:
        if attr.startswith("_") or attr not in self.defaults:
            raise AttributeError(f"Invalid setting: '{attr}'")

        # Try explicit overrides, then environment variables
        val = self.defaults[attr]
        try:
            val = self._overrides[attr]
        except KeyError:
            try:
                val = env(attr, cast=type(val))
            except environ.ImproperlyConfigured:
                # Fall back to defaults
                pass

        self._cached_attrs.add(attr)
        setattr(self, attr, val)
        return val

    def configure(self, **overrides: Any) -> None:
        """
        Override settings for the running process.

        Args:
            **overrides: Setting names mapped to their new values; ``None``
                values are ignored so optional CLI flags can be passed through.
        """
        for name, value in overrides.items():
            if name not in self.defaults:
                raise ImproperlyConfigured(f"Unknown setting: '{name}'")
            if value is not None:
                self._overrides[name] = type(self.defaults[name])(value)
        self.reload()
        self.validate()

    def validate(self) -> None:
        """
        Validate the toolkit settings.

        Checks that every limit, tolerance and worker count is strictly positive.
        """
        for setting in self.positive_settings:
            if not getattr(self, setting) > 0:
                raise ImproperlyConfigured(
                    f'The "{setting}" setting must be positive. '
                    f'Please fix "{setting}" in the environment or the {PACKAGE_NAME} overrides.'
                )

    def reload(self) -> None:
        """
        Reset cached attributes so they will be recalculated on next access.
        """
        for attr in self._cached_attrs:
            if attr in self.__dict__:
                delattr(self, attr)
        self._cached_attrs.clear()

    def reset(self) -> None:
        """Drop every override and return to environment/default values."""
        self._overrides.clear()
        self.reload()


POSITIVE_SETTINGS = {
    "DL_ORDER_CAP",
    "DL_CANONICAL_LIMIT",
    "DL_BRUTE_FORCE_LIMIT",
    "DL_EIGEN_TOLERANCE",
    "DL_MULTIPLICITY_TOLERANCE",
    "DL_PLANARITY_LIMIT",
    "DL_CIRCULANT_LIMIT",
    "DL_ENUMERATE_LIMIT",
    "DL_CENSUS_SHARDS",
    "DL_CENSUS_SPILL_THRESHOLD",
    "DL_INGEST_MAX_ERRORS",
    "DL_WITNESS_LIMIT",
}

DEFAULTS = {
    "DL_ORDER_CAP": 64,
    "DL_CANONICAL_LIMIT": 32,
    "DL_BRUTE_FORCE_LIMIT": 8,
    "DL_EIGEN_TOLERANCE": 1e-9,
    "DL_MULTIPLICITY_TOLERANCE": 1e-6,
    "DL_PLANARITY_LIMIT": 16,
    "DL_CIRCULANT_LIMIT": 10,
    "DL_ENUMERATE_LIMIT": 8,
    "DL_CENSUS_SHARDS": 1,
    "DL_CENSUS_SPILL_THRESHOLD": 2_000_000,
    "DL_CENSUS_TMPDIR": "",
    "DL_INGEST_MAX_ERRORS": 100,
    "DL_WITNESS_LIMIT": 3,
}

settings = ToolkitSettings(
    PACKAGE_NAME, defaults=DEFAULTS, positive_settings=POSITIVE_SETTINGS
)
