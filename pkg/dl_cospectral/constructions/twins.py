"""Independent twins, co-transmission twin sets and twinning."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from dl_cospectral.core.exceptions import ConstructionError
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.spectra.charpoly import CharPoly
from dl_cospectral.spectra.matrices import transmissions
from dl_cospectral.spectra.twins import are_independent_twins

logger = logging.getLogger(__name__)

# Polynomial of the two edge additions on the order-8 co-transmission twin host
CO_TRANSMISSION_TARGET = CharPoly.parse(
    "x^8 - 104x^7 + 4601x^6 - 112224x^5 + 1629571x^4 - 14083840x^3 + 67065731x^2 - 135702840x"
)
CO_TRANSMISSION_TARGET_TRANSMISSION = 15


@dataclass(frozen=True)
class TwinSet:
    """
    Two disjoint pairs of independent twins with one common transmission.

    Attributes:
        host: Graph holding the twins
        pairs: ``((v1, v2), (v3, v4))``
        transmission: ``t(v1) = t(v3)``
    """

    host: Graph
    pairs: Tuple[Tuple[int, int], Tuple[int, int]]
    transmission: int

    @property
    def vertices(self) -> Tuple[int, int, int, int]:
        (v1, v2), (v3, v4) = self.pairs
        return v1, v2, v3, v4


def find_independent_twins(g: Graph) -> List[Tuple[int, int]]:
    """All pairs ``u < v`` with equal neighbourhoods that are not adjacent."""
    return [
        (u, v)
        for u in g.vertices()
        for v in range(u + 1, g.order)
        if are_independent_twins(g, u, v)
    ]


def find_co_transmission_twin_sets(g: Graph) -> List[TwinSet]:
    """
    Every pair of disjoint independent twin pairs sharing a transmission.

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
    """
    t = transmissions(all_pairs_distances(g))
    twins = find_independent_twins(g)
    found = []
    for i, first in enumerate(twins):
        for second in twins[i + 1:]:
            if set(first) & set(second):
                continue
            if t[first[0]] == t[second[0]]:
                found.append(TwinSet(g, (first, second), t[first[0]]))
    return found


def twin_vertex(g: Graph, v: int) -> Graph:
    """Add a vertex ``g.order`` whose neighbourhood equals that of ``v``."""
    g.check_vertex(v)
    new = g.order
    return Graph(g.order + 1, g.edges() + [(new, w) for w in g.neighbors(v)])


def co_transmission_twin_host() -> Tuple[Graph, TwinSet]:
    """
    Rebuild an order-8 host whose co-transmission twins (transmission 15)
    give non-isomorphic edge additions with ``CO_TRANSMISSION_TARGET``.

    Such a host loses one vertex of each twin pair without changing any other
    distance, so it is found by twinning two equal-transmission vertices of a
    connected order-6 graph. The first hit in enumeration order is returned.

    Raises:
        ConstructionError: If no order-6 graph yields the target polynomial
    """
    from dl_cospectral.census.enumeration import enumerate_connected
    from dl_cospectral.constructions.cousins import CousinSet, inner_switch_pair
    from dl_cospectral.spectra.cospectral import dl_char_poly

    for base in enumerate_connected(6):
        t = transmissions(all_pairs_distances(base))
        for u in base.vertices():
            for v in range(u + 1, base.order):
                if t[u] != t[v]:
                    continue
                host = twin_vertex(twin_vertex(base, u), v)
                twin_set = _twin_set_for(host, (u, 6), (v, 7))
                if twin_set is None or twin_set.transmission != CO_TRANSMISSION_TARGET_TRANSMISSION:
                    continue
                pair = inner_switch_pair(host, CousinSet(host, twin_set.pairs))
                if pair is not None and dl_char_poly(pair[0]) == CO_TRANSMISSION_TARGET:
                    logger.info(f"Co-transmission twin host found by twinning {u} and {v}")
                    return host, twin_set
    raise ConstructionError("no order-8 co-transmission twin host yields the target polynomial")


def _twin_set_for(host: Graph, first: Tuple[int, int], second: Tuple[int, int]) -> Optional[TwinSet]:
    if not (are_independent_twins(host, *first) and are_independent_twins(host, *second)):
        return None
    t = transmissions(all_pairs_distances(host))
    if t[first[0]] != t[second[0]]:
        return None
    return TwinSet(host, (first, second), t[first[0]])
