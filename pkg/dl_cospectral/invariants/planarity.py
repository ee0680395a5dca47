"""Planarity and circulant recognition at small order."""

import logging
from typing import List, Optional

import networkx as nx

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import OrderLimitError
from dl_cospectral.graphs.graph import Graph

logger = logging.getLogger(__name__)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from(g.edges())
    return graph


def is_planar(g: Graph) -> bool:
    """
    Planarity, with the Euler bound ``e <= 3n - 6`` as a quick negative filter.

    Raises:
        OrderLimitError: If the order is above ``DL_PLANARITY_LIMIT``
    """
    limit = settings.DL_PLANARITY_LIMIT
    if g.order > limit:
        raise OrderLimitError(g.order, limit, "planarity order")
    if g.order >= 3 and g.edge_count > 3 * g.order - 6:
        return False
    planar, _ = nx.check_planarity(to_networkx(g))
    return bool(planar)


def cyclic_labeling(g: Graph) -> Optional[List[int]]:
    """
    Vertex order ``x0, x1, ...`` under which the adjacency is circulant.

    Vertex 0 is placed first. Each next vertex must agree with the jump
    pattern fixed by the earlier ones: ``x_i ~ x_j`` exactly when
    ``x_0 ~ x_(j-i)``.
    """
    n = g.order
    if len(set(g.degrees())) != 1:
        return None
    pattern: List[Optional[bool]] = [None] * n
    pattern[0] = False
    chosen = [0]
    used = {0}

    def extend() -> bool:
        j = len(chosen)
        if j == n:
            return True
        for x in g.vertices():
            if x in used:
                continue
            jump_bit = g.adjacent(0, x)
            mirror = pattern[n - j]
            if n - j < j and mirror is not None and mirror != jump_bit:
                continue
            if any(g.adjacent(chosen[i], x) != pattern[j - i] for i in range(1, j)):
                continue
            pattern[j] = jump_bit
            chosen.append(x)
            used.add(x)
            if extend():
                return True
            chosen.pop()
            used.discard(x)
            pattern[j] = None
        return False

    return list(chosen) if extend() else None


def is_circulant(g: Graph) -> bool:
    """
    Raises:
        OrderLimitError: If the order is above ``DL_CIRCULANT_LIMIT``
    """
    limit = settings.DL_CIRCULANT_LIMIT
    if g.order > limit:
        raise OrderLimitError(g.order, limit, "circulant recognition order")
    return cyclic_labeling(g) is not None
