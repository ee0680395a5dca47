"""
Built-in enumeration of small graphs up to isomorphism.

Graphs of order ``n`` are grown from the graphs of order ``n - 1`` by adding
one vertex with every possible neighbourhood, and the results are deduplicated
by canonical form. Connected graphs only need connected parents: every
connected graph has a vertex whose removal leaves it connected (a leaf of any
spanning tree).
"""

import logging
from typing import Iterator, Set

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.graph import Graph, iter_bits
from dl_cospectral.graphs.isomorphism import CanonicalForm, canonical_form

logger = logging.getLogger(__name__)


def _check_order(n: int) -> None:
    limit = settings.DL_ENUMERATE_LIMIT
    if n < 1:
        raise ParameterError(f"enumeration order must be at least 1, got {n}")
    if n > limit:
        raise ParameterError(
            f"built-in enumeration stops at order {limit}; "
            f"ingest an external graph6 corpus for order {n}"
        )


def _extensions(g: Graph, connected: bool) -> Iterator[Graph]:
    new = g.order
    edges = g.edges()
    for mask in range(1 if connected else 0, 1 << g.order):
        yield Graph(g.order + 1, edges + [(v, new) for v in iter_bits(mask)])


def _level(n: int, connected: bool) -> Set[CanonicalForm]:
    forms = {canonical_form(Graph(1))}
    for order in range(2, n + 1):
        grown = set()
        for form in forms:
            for child in _extensions(form.to_graph(), connected):
                grown.add(canonical_form(child))
        forms = grown
        logger.debug(f"Order {order}: {len(forms)} {'connected ' if connected else ''}graphs")
    return forms


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """
    One representative per isomorphism class of graphs of order ``n``.

    Representatives come out in canonical labeling, ordered by canonical form.

    Raises:
        ParameterError: If ``n`` is below 1 or above ``DL_ENUMERATE_LIMIT``
    """
    _check_order(n)
    for form in sorted(_level(n, connected=False)):
        yield form.to_graph()


def enumerate_connected(n: int) -> Iterator[Graph]:
    """
    One representative per isomorphism class of connected graphs of order ``n``.

    Raises:
        ParameterError: If ``n`` is below 1 or above ``DL_ENUMERATE_LIMIT``
    """
    _check_order(n)
    forms = _level(n, connected=True)
    logger.info(f"Enumerated {len(forms)} connected graphs of order {n}")
    for form in sorted(forms):
        yield form.to_graph()
