"""Breadth-first distances and connectivity over adjacency bit rows."""

from typing import List

from dl_cospectral.core.exceptions import DisconnectedGraphError
from dl_cospectral.graphs.graph import DistanceMatrix, Graph, iter_bits


def bfs_levels(g: Graph, source: int) -> List[int]:
    """
    Distances from ``source`` to every vertex, ``-1`` for unreachable ones.

    Each step expands the whole frontier at once by OR-ing its rows.
    """
    g.check_vertex(source)
    rows = g.rows
    levels = [-1] * g.order
    levels[source] = 0
    seen = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            levels[v] = depth
    return levels


def connected_components(g: Graph) -> List[List[int]]:
    """Vertex lists of the connected components, ordered by smallest vertex."""
    rows = g.rows
    unvisited = (1 << g.order) - 1
    components = []
    while unvisited:
        low = unvisited & -unvisited
        seen = frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & ~seen
            seen |= frontier
        components.append(list(iter_bits(seen)))
        unvisited &= ~seen
    return components


def components_count(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return -1 not in bfs_levels(g, 0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """
    Shortest-path lengths between every pair of vertices.

    Raises:
        DisconnectedGraphError: If some vertex cannot be reached; the error
            names one unreachable pair and the number of components
    """
    entries = []
    for source in g.vertices():
        levels = bfs_levels(g, source)
        if -1 in levels:
            raise DisconnectedGraphError((source, levels.index(-1)), components_count(g))
        entries.append(levels)
    return DistanceMatrix(entries)
