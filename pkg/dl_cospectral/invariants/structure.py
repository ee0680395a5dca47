"""Structural parameters: girth, bipartiteness, leaves, dominating and cut vertices."""

from collections import Counter
from typing import Tuple

from dl_cospectral.graphs.distances import is_connected
from dl_cospectral.graphs.graph import DistanceMatrix, Graph, iter_bits
from dl_cospectral.graphs.operators import delete_vertex


def girth(g: Graph) -> int:
    """Length of a shortest cycle, 0 for a forest."""
    rows = g.rows
    best = 0
    for root in g.vertices():
        depth = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            if best and 2 * depth[u] + 1 >= best:
                break
            for w in iter_bits(rows[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = depth[u] + depth[w] + 1
                    if not best or length < best:
                        best = length
    return best


def is_bipartite(g: Graph) -> bool:
    rows = g.rows
    colour = [-1] * g.order
    for start in g.vertices():
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = [start]
        for u in queue:
            for w in iter_bits(rows[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.order - 1 and is_connected(g)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) == 1


def has_leaf(g: Graph) -> bool:
    return 1 in g.degrees()


def has_dominating_vertex(g: Graph) -> bool:
    return g.order - 1 in g.degrees()


def has_cut_vertex(g: Graph) -> bool:
    """True when deleting some vertex disconnects the (connected) graph."""
    if g.order < 3:
        return False
    return any(not is_connected(delete_vertex(g, v)) for v in g.vertices())


def distance_multiset(d: DistanceMatrix) -> Tuple[Tuple[int, int], ...]:
    """``(distance, count)`` over unordered vertex pairs, sorted by distance."""
    counts = Counter(d[i, j] for i in range(d.order) for j in range(i + 1, d.order))
    return tuple(sorted(counts.items()))
