"""Per-invocation configuration assembled from parsed command-line flags."""

import argparse
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import ImproperlyConfigured

# flag attribute -> setting it overrides
SETTING_FLAGS = {
    "eigen_tolerance": "DL_EIGEN_TOLERANCE",
    "multiplicity_tolerance": "DL_MULTIPLICITY_TOLERANCE",
    "order_cap": "DL_ORDER_CAP",
    "planarity_limit": "DL_PLANARITY_LIMIT",
    "circulant_limit": "DL_CIRCULANT_LIMIT",
    "shards": "DL_CENSUS_SHARDS",
    "spill_threshold": "DL_CENSUS_SPILL_THRESHOLD",
    "tmpdir": "DL_CENSUS_TMPDIR",
}


@dataclass
class CommandConfig:
    """
    Everything a subcommand handler needs besides its own arguments.

    Attributes:
        subcommand: Name of the subcommand
        inputs: Input paths (graph6 files or corpora)
        output: Output path, if any
        json_output: Emit machine-readable JSON instead of text
        overrides: Setting overrides from tolerance and limit flags
    """

    subcommand: str
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    json_output: bool = False
    overrides: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandConfig":
        inputs = []
        for attr in ("file", "corpus"):
            value = getattr(args, attr, None)
            if value:
                inputs.extend(value if isinstance(value, list) else [value])
        overrides = {
            setting: getattr(args, attr)
            for attr, setting in SETTING_FLAGS.items()
            if getattr(args, attr, None) is not None
        }
        return cls(
            subcommand=args.command,
            inputs=inputs,
            output=getattr(args, "out", None),
            json_output=args.json,
            overrides=overrides,
        )

    @property
    def shards(self) -> int:
        return self.overrides.get("DL_CENSUS_SHARDS", settings.DL_CENSUS_SHARDS)

    def validate(self) -> None:
        """
        Raises:
            ImproperlyConfigured: If a shard count, tolerance or limit is not positive
        """
        for name, value in self.overrides.items():
            if name != "DL_CENSUS_TMPDIR" and not value > 0:
                raise ImproperlyConfigured(f"{name} must be positive, got {value}")

    def apply(self) -> None:
        """Push the overrides into the process-wide settings."""
        settings.configure(**self.overrides)
