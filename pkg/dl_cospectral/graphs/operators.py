"""Graph operators. Every operator returns a new graph."""

from typing import Iterable, Sequence

from dl_cospectral.core.exceptions import GraphError
from dl_cospectral.graphs.graph import Graph, iter_bits


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph.from_rows([full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    Subgraph induced by ``vertices``.

    The kept vertices are renumbered ``0..k-1`` in increasing order of their
    original labels.
    """
    kept = sorted(set(vertices))
    if not kept:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in kept:
        g.check_vertex(v)
    position = {v: i for i, v in enumerate(kept)}
    return Graph(
        len(kept),
        [
            (position[u], position[v])
            for u in kept
            for v in iter_bits(g.rows[u])
            if u < v and v in position
        ],
    )


def delete_vertex(g: Graph, v: int) -> Graph:
    g.check_vertex(v)
    return induced_subgraph(g, [u for u in g.vertices() if u != v])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """
    Return ``g + uv``.

    Raises:
        GraphError: If a vertex is out of range, ``u == v``, or ``uv`` is
            already an edge
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError(f"cannot add a loop at vertex {u}")
    if g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) is already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph.from_rows(rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) is not present")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph.from_rows(rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the bijection ``v -> perm[v]`` to the vertices of ``g``."""
    if sorted(perm) != list(g.vertices()):
        raise GraphError(f"{list(perm)} is not a permutation of 0..{g.order - 1}")
    rows = [0] * g.order
    for v, row in enumerate(g.rows):
        image = 0
        for w in iter_bits(row):
            image |= 1 << perm[w]
        rows[perm[v]] = image
    return Graph.from_rows(rows)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    Cartesian product ``g □ h``.

    Vertex ``(a, b)`` is numbered ``a * h.order + b``.
    """
    m = h.order
    edges = []
    for a in g.vertices():
        for b, c in h.edges():
            edges.append((a * m + b, a * m + c))
    for a, c in g.edges():
        for b in h.vertices():
            edges.append((a * m + b, c * m + b))
    return Graph(g.order * m, edges)


def line_graph(g: Graph) -> Graph:
    """
    Line graph of ``g``; vertex ``i`` is the ``i``-th edge of ``g.edges()``.

    Raises:
        GraphError: If ``g`` has no edges
    """
    edges = g.edges()
    if not edges:
        raise GraphError("the line graph of an edgeless graph has no vertices")
    incident = [[] for _ in g.vertices()]
    for index, (u, v) in enumerate(edges):
        incident[u].append(index)
        incident[v].append(index)
    pairs = set()
    for at_vertex in incident:
        for i, first in enumerate(at_vertex):
            for second in at_vertex[i + 1:]:
                pairs.add((first, second))
    return Graph(len(edges), pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.edges() + [(u + shift, v + shift) for u, v in h.edges()])
