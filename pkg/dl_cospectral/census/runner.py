"""
Census driver: shard workers compute keys, one reducer groups them.

Each worker turns a chunk of graphs into ``(poly key, canonical graph6)``
records. Workers share nothing; the settings they need travel with the chunk
so process-based workers see the same limits as the caller.
"""

import itertools
import logging
from typing import Any, Dict, Iterable, Iterator, List, Optional

from joblib import Parallel, delayed
from tqdm import tqdm

from dl_cospectral.census.reducer import BucketReducer, CospectralClass, Record
from dl_cospectral.core.config import DEFAULTS, settings
from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.formats import parse_graph6
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.isomorphism import are_isomorphic, canonical_form
from dl_cospectral.spectra.charpoly import CharPoly
from dl_cospectral.spectra.cospectral import dl_char_poly

logger = logging.getLogger(__name__)

CHUNK_SIZE = 500


def _settings_snapshot() -> Dict[str, Any]:
    return {name: getattr(settings, name) for name in DEFAULTS}


def shard_records(chunk: List[str], snapshot: Dict[str, Any]) -> List[Record]:
    """Compute the census records of one chunk of graph6 strings."""
    changed = {name: value for name, value in snapshot.items() if getattr(settings, name) != value}
    if changed:
        settings.configure(**changed)
    records = []
    for text in chunk:
        g = parse_graph6(text)
        key = dl_char_poly(g).key()
        if g.order <= settings.DL_CANONICAL_LIMIT:
            text = canonical_form(g).graph6
        records.append((key, text))
    return records


def _chunks(graphs: Iterable[Graph], size: int) -> Iterator[List[str]]:
    iterator = iter(graphs)
    while True:
        chunk = [g.to_graph6() for g in itertools.islice(iterator, size)]
        if not chunk:
            return
        yield chunk


def _isomorphism_representatives(members: List[str]) -> List[str]:
    """First member of each isomorphism class, for orders beyond canonical forms."""
    kept: List[str] = []
    graphs: List[Graph] = []
    for text in members:
        g = parse_graph6(text)
        if not any(are_isomorphic(g, other) for other in graphs):
            kept.append(text)
            graphs.append(g)
    return kept


def run_census(
    graphs: Iterable[Graph],
    shards: Optional[int] = None,
    progress: bool = False,
    reducer: Optional[BucketReducer] = None,
) -> List[CospectralClass]:
    """
    Find every distance Laplacian cospectral class among ``graphs``.

    Args:
        graphs: Connected graphs; orders may be mixed
        shards: Worker processes; defaults to ``DL_CENSUS_SHARDS``
        progress: Show a progress bar over processed chunks
        reducer: Custom reducer, e.g. with a small spill threshold

    Returns:
        List[CospectralClass]: Classes with at least two non-isomorphic
        members, sorted by polynomial key and then by members

    Raises:
        DisconnectedGraphError: If an input graph is disconnected
    """
    shards = settings.DL_CENSUS_SHARDS if shards is None else shards
    if shards < 1:
        raise ParameterError(f"shard count must be at least 1, got {shards}")
    reducer = reducer or BucketReducer()
    snapshot = _settings_snapshot()

    logger.info(f"Census started with {shards} shard(s)")
    jobs = (delayed(shard_records)(chunk, snapshot) for chunk in _chunks(graphs, CHUNK_SIZE))
    results = Parallel(n_jobs=shards, return_as="generator")(jobs)
    seen = 0
    for records in tqdm(results, desc="census", unit="chunk", disable=not progress):
        for key, text in records:
            reducer.add(key, text)
        seen += len(records)
    logger.info(f"Census keyed {seen} graphs; grouping by polynomial")

    classes = []
    for key, members in reducer.groups():
        if len(members) < 2:
            continue
        poly = CharPoly.from_key(key)
        if poly.degree > settings.DL_CANONICAL_LIMIT:
            members = _isomorphism_representatives(members)
            if len(members) < 2:
                continue
        classes.append(CospectralClass(poly, tuple(members)))
    classes.sort(key=CospectralClass.sort_key)
    logger.info(f"Census found {len(classes)} cospectral classes among {seen} graphs")
    return classes
