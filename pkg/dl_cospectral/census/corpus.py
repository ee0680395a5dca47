"""Streaming ingestion of newline-delimited graph6 corpora."""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator, Optional, Union

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import CorpusError, Graph6Error, GraphError
from dl_cospectral.graphs.distances import is_connected
from dl_cospectral.graphs.formats import iter_graph6, parse_graph6
from dl_cospectral.graphs.graph import Graph

logger = logging.getLogger(__name__)

STDIN = "-"


@contextmanager
def _open(path: Union[str, Path]) -> Iterator[IO[str]]:
    if str(path) == STDIN:
        yield sys.stdin
    else:
        with open(path, encoding="ascii", errors="replace") as stream:
            yield stream


class CorpusReader:
    """
    Iterate over the connected graphs of a graph6 file.

    Disconnected graphs are skipped with a warning. Malformed lines are
    skipped with a warning carrying the line number until more than
    ``max_errors`` of them have been seen, then ingestion aborts.

    Example:
        reader = CorpusReader("graph8c.g6")
        for g in reader:
            ...
        print(reader.accepted, reader.disconnected, reader.malformed)
    """

    def __init__(self, path: Union[str, Path], max_errors: Optional[int] = None) -> None:
        self.path = path
        self.max_errors = settings.DL_INGEST_MAX_ERRORS if max_errors is None else max_errors
        self.accepted = 0
        self.disconnected = 0
        self.malformed = 0

    def __iter__(self) -> Iterator[Graph]:
        logger.info(f"Ingesting graph6 corpus from {self.path}")
        with _open(self.path) as stream:
            for line_number, text in iter_graph6(stream):
                try:
                    g = parse_graph6(text)
                except (Graph6Error, GraphError) as e:
                    self.malformed += 1
                    logger.warning(f"{self.path}:{line_number}: skipped malformed graph6: {e}")
                    if self.malformed > self.max_errors:
                        raise CorpusError(
                            f"more than {self.max_errors} malformed lines in {self.path}",
                            line=line_number,
                        ) from e
                    continue
                if not is_connected(g):
                    self.disconnected += 1
                    logger.warning(f"{self.path}:{line_number}: skipped disconnected graph {text}")
                    continue
                self.accepted += 1
                yield g
        logger.info(
            f"Ingested {self.accepted} graphs from {self.path} "
            f"({self.disconnected} disconnected, {self.malformed} malformed skipped)"
        )


def ingest_corpus(path: Union[str, Path], max_errors: Optional[int] = None) -> Iterator[Graph]:
    """Connected graphs of a graph6 file, or of stdin when ``path`` is ``"-"``."""
    return iter(CorpusReader(path, max_errors))
