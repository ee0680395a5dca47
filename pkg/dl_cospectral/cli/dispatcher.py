"""Routes a parsed command to its handler."""

import argparse
import logging
from typing import IO

from dl_cospectral.cli.config import CommandConfig

logger = logging.getLogger(__name__)


class CommandDispatcher:
    """
    Dispatch a subcommand to the handler class that implements it.

    Handlers are imported on first use so that ``--help`` and quick
    subcommands do not pay for the census machinery.
    """

    def __init__(self, config: CommandConfig, args: argparse.Namespace, stdout: IO[str]):
        self.config = config
        self.args = args
        self.stdout = stdout

    def dispatch(self) -> int:
        """
        Run the configured subcommand.

        Returns:
            Exit code: 0 on success, 1 when a verification failed, 2 on an input error
        """
        route = {
            "spectrum": self._spectrum,
            "construct": self._construct,
            "verify": self._verify,
            "census": self._census,
            "check": self._check,
        }
        logger.debug(f"Dispatching {self.config.subcommand}")
        return route[self.config.subcommand]()

    def _spectrum(self) -> int:
        from dl_cospectral.cli.handlers.spectrum import SpectrumHandler
        return SpectrumHandler(self.config, self.args, self.stdout).run()

    def _construct(self) -> int:
        from dl_cospectral.cli.handlers.construct import ConstructHandler
        return ConstructHandler(self.config, self.args, self.stdout).run()

    def _verify(self) -> int:
        from dl_cospectral.cli.handlers.verify import VerifyHandler
        return VerifyHandler(self.config, self.args, self.stdout).run()

    def _census(self) -> int:
        from dl_cospectral.cli.handlers.census import CensusHandler
        return CensusHandler(self.config, self.args, self.stdout).run()

    def _check(self) -> int:
        from dl_cospectral.cli.handlers.check import CheckHandler
        return CheckHandler(self.config, self.args, self.stdout).run()
