"""Immutable simple graphs stored as adjacency bit rows, and distance matrices."""

from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import GraphError, OrderLimitError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """
    Simple undirected graph on the vertices ``0..order-1``.

    Row ``i`` of the adjacency is an integer whose bit ``j`` is set when
    ``i`` and ``j`` are adjacent. Instances never change after construction;
    every operator returns a new graph.
    """

    __slots__ = ("_order", "_rows")

    def __init__(self, order: int, edges: Iterable[Tuple[int, int]] = ()):
        """
        Build a graph from its order and an edge iterable.

        Args:
            order: Number of vertices, at least one
            edges: Pairs ``(u, v)`` with ``u != v``; repeated pairs are merged

        Raises:
            GraphError: If the order is not positive, a vertex is out of
                range, or an edge is a loop
            OrderLimitError: If the order is above ``DL_ORDER_CAP``
        """
        _check_order(order)
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{order - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u} is not allowed in a simple graph")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_rows", tuple(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build a graph directly from adjacency bit rows, validating symmetry."""
        order = len(rows)
        _check_order(order)
        full = (1 << order) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {i} has bits outside 0..{order - 1}")
            if row >> i & 1:
                raise GraphError(f"row {i} has a loop")
            for j in iter_bits(row):
                if not rows[j] >> i & 1:
                    raise GraphError(f"adjacency is not symmetric at ({i}, {j})")
        graph = cls.__new__(cls)
        object.__setattr__(graph, "_order", order)
        object.__setattr__(graph, "_rows", tuple(rows))
        return graph

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        """Build a graph from the fixture format ``"n; u v; u v; ..."``."""
        from dl_cospectral.graphs.formats import parse_edge_list

        return parse_edge_list(text)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        from dl_cospectral.graphs.formats import parse_graph6

        return parse_graph6(text)

    def to_graph6(self) -> str:
        from dl_cospectral.graphs.formats import encode_graph6

        return encode_graph6(self)

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def __reduce__(self):
        return (Graph.from_rows, (self._rows,))

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    def vertices(self) -> range:
        return range(self._order)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._order:
            raise GraphError(f"vertex {v} is outside 0..{self._order - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._rows]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u, row in enumerate(self._rows)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._order, self._order), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count})"


def _check_order(order: int) -> None:
    if order < 1:
        raise GraphError(f"graph order must be at least 1, got {order}")
    cap = settings.DL_ORDER_CAP
    if order > cap:
        raise OrderLimitError(order, cap)


class DistanceMatrix:
    """
    Pairwise shortest-path lengths (in edge hops) of a connected graph.

    Entries are stored as a tuple of row tuples.
    """

    __slots__ = ("order", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        self.order = len(entries)
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.entries)

    def is_valid(self) -> bool:
        """Check symmetry, the zero diagonal, positivity and the triangle inequality."""
        n = self.order
        d = self.entries
        for i in range(n):
            if d[i][i] != 0:
                return False
            for j in range(n):
                if d[i][j] != d[j][i] or (i != j and d[i][j] < 1):
                    return False
        for j in range(n):
            dj = d[j]
            for i in range(n):
                dij = d[i][j]
                di = d[i]
                if any(di[k] > dij + dj[k] for k in range(n)):
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"DistanceMatrix(order={self.order})"
