"""Base class for subcommand handlers."""

import argparse
import json
import logging
import sys
from typing import IO, Any, List, Tuple

from dl_cospectral.cli.config import CommandConfig
from dl_cospectral.core.exceptions import DLCospectralError, ParameterError
from dl_cospectral.graphs.graph import Graph

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


class BaseCommandHandler:
    """
    Base class for all subcommand handlers.

    Provides graph loading from the shared source flags, output helpers and
    the mapping of library errors to exit codes.
    """

    def __init__(self, config: CommandConfig, args: argparse.Namespace, stdout: IO[str]):
        """
        Initialize the base handler.

        Args:
            config: Invocation configuration
            args: Parsed flags of the subcommand
            stdout: Stream the results are written to
        """
        self.config = config
        self.args = args
        self.stdout = stdout

    def run(self) -> int:
        """
        Handle the subcommand and turn errors into exit codes.

        Returns:
            Exit code of the subcommand, ``EXIT_INPUT_ERROR`` when it raised
        """
        try:
            return self.handle()
        except (DLCospectralError, OSError) as e:
            return self._handle_error(e, self.config.subcommand)

    def handle(self) -> int:
        raise NotImplementedError

    def emit(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def emit_json(self, payload: Any) -> None:
        self.stdout.write(json.dumps(payload, indent=2, default=str) + "\n")

    def _load_graphs(self) -> List[Tuple[str, Graph]]:
        """
        Collect ``(label, graph)`` from ``--g6``, ``--edges``, ``--file`` and ``--family``.

        Raises:
            ParameterError: If no source flag was given
        """
        from dl_cospectral.constructions.families import FAMILY_PARAMETER_NAMES, build_family, build_named_family
        from dl_cospectral.graphs.formats import iter_graph6, parse_edge_list, parse_graph6

        graphs: List[Tuple[str, Graph]] = []
        for text in getattr(self.args, "g6", None) or []:
            graphs.append((text, parse_graph6(text)))
        for text in getattr(self.args, "edges", None) or []:
            graphs.append((text, parse_edge_list(text)))
        for path in getattr(self.args, "file", None) or []:
            if path == "-":
                stream_lines = list(iter_graph6(sys.stdin))
            else:
                with open(path, encoding="ascii") as stream:
                    stream_lines = list(iter_graph6(stream))
            graphs.extend((f"{path}:{line}", parse_graph6(text)) for line, text in stream_lines)
        family = getattr(self.args, "family", None)
        if family:
            if ":" in family:
                built, _ = build_family(family)
            else:
                values = {
                    name: getattr(self.args, f"family_{name}")
                    for name in FAMILY_PARAMETER_NAMES
                    if getattr(self.args, f"family_{name}", None) is not None
                }
                built, _ = build_named_family(family, values)
            graphs.extend((f"{family}[{index}]", g) for index, g in enumerate(built))
        if not graphs:
            raise ParameterError("no graph given; use --g6, --edges, --file or --family")
        logger.debug(f"Loaded {len(graphs)} graph(s)")
        return graphs

    def _handle_error(self, error: Exception, context: str = "command") -> int:
        """
        Log an error raised while handling the subcommand.

        Args:
            error: Exception that occurred
            context: Description of what was being attempted

        Returns:
            ``EXIT_INPUT_ERROR``
        """
        logger.error(f"Error during {context}: {error}", exc_info=True)
        return EXIT_INPUT_ERROR
