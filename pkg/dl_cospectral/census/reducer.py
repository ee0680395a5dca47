"""
Single-threaded reducer grouping ``(poly key, graph6)`` records by key.

Keys are hashed to 8-byte blake2b digests for the in-memory map; a digest
only selects a bucket and the full key is always compared inside it. Past
the spill threshold the buffered records are written as one sorted run to a
temporary file, and all runs are merged with a k-way merge at the end.
"""

import hashlib
import heapq
import itertools
import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from dl_cospectral.core.config import settings
from dl_cospectral.spectra.charpoly import CharPoly

logger = logging.getLogger(__name__)

Record = Tuple[str, str]


@dataclass(frozen=True)
class CospectralClass:
    """Pairwise non-isomorphic connected graphs sharing one distance Laplacian polynomial."""

    poly: CharPoly
    members: Tuple[str, ...]

    @property
    def order(self) -> int:
        return self.poly.degree

    def sort_key(self) -> Tuple[str, Tuple[str, ...]]:
        return self.poly.key(), self.members


def key_digest(key: str) -> bytes:
    return hashlib.blake2b(key.encode("ascii"), digest_size=8).digest()


class BucketReducer:
    """
    Collect records and hand them back grouped by key in sorted key order.

    Args:
        spill_threshold: Records buffered in memory before a sorted run is
            spilled; defaults to ``DL_CENSUS_SPILL_THRESHOLD``
        tmpdir: Spill directory; defaults to ``DL_CENSUS_TMPDIR`` or the
            system temporary directory
    """

    def __init__(self, spill_threshold: Optional[int] = None, tmpdir: Optional[str] = None) -> None:
        self.spill_threshold = spill_threshold or settings.DL_CENSUS_SPILL_THRESHOLD
        self.tmpdir = tmpdir or settings.DL_CENSUS_TMPDIR or None
        self._buckets: Dict[bytes, List[Tuple[str, List[str]]]] = {}
        self._buffered = 0
        self._runs: List[str] = []

    @property
    def runs(self) -> int:
        return len(self._runs)

    def add(self, key: str, graph6: str) -> None:
        bucket = self._buckets.setdefault(key_digest(key), [])
        for candidate, members in bucket:
            if candidate == key:
                members.append(graph6)
                break
        else:
            bucket.append((key, [graph6]))
        self._buffered += 1
        if self._buffered >= self.spill_threshold:
            self._spill()

    def _sorted_records(self) -> List[Record]:
        return sorted(
            (key, graph6)
            for bucket in self._buckets.values()
            for key, members in bucket
            for graph6 in members
        )

    def _spill(self) -> None:
        fd, path = tempfile.mkstemp(prefix="dl-census-", suffix=".run", dir=self.tmpdir)
        with os.fdopen(fd, "w", encoding="ascii") as run:
            for key, graph6 in self._sorted_records():
                run.write(f"{key}\t{graph6}\n")
        logger.info(f"Spilled {self._buffered} records to {path}")
        self._runs.append(path)
        self._buckets.clear()
        self._buffered = 0

    @staticmethod
    def _read_run(path: str) -> Iterator[Record]:
        with open(path, encoding="ascii") as run:
            for line in run:
                key, graph6 = line.rstrip("\n").split("\t")
                yield key, graph6

    def groups(self) -> Iterator[Tuple[str, List[str]]]:
        """
        Yield ``(key, sorted distinct graph6 strings)`` for every key, in key order.

        Spill files are removed once the merge is exhausted.
        """
        if not self._runs:
            records: Iterator[Record] = iter(self._sorted_records())
        else:
            if self._buffered:
                self._spill()
            records = heapq.merge(*(self._read_run(path) for path in self._runs))
        try:
            for key, group in itertools.groupby(records, key=lambda record: record[0]):
                yield key, sorted({graph6 for _, graph6 in group})
        finally:
            self._cleanup()

    def _cleanup(self) -> None:
        for path in self._runs:
            try:
                os.remove(path)
            except OSError:
                logger.warning(f"Could not remove spill file {path}")
        self._runs.clear()
        self._buckets.clear()
        self._buffered = 0
