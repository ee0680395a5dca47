"""Integer matrices built from distance matrices."""

from typing import Iterator, Sequence, Tuple

import numpy as np

from dl_cospectral.core.exceptions import GraphError
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import DistanceMatrix, Graph


class TransmissionVector:
    """Transmission ``t(v)``, the sum of distances from ``v``, for every vertex."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        self.values = tuple(int(x) for x in values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransmissionVector):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"TransmissionVector({list(self.values)})"

    @property
    def total(self) -> int:
        return sum(self.values)

    def is_regular(self) -> bool:
        return len(set(self.values)) == 1

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.values))


class IntegerSymmetricMatrix:
    """
    Symmetric matrix with exact integer entries.

    Holds distance Laplacians, diagonal transmission matrices and distance
    matrices alike.
    """

    __slots__ = ("order", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        order = len(entries)
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        for i, row in enumerate(rows):
            if len(row) != order:
                raise GraphError(f"row {i} has {len(row)} entries, expected {order}")
        for i in range(order):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise GraphError(f"matrix is not symmetric at ({i}, {j})")
        self.order = order
        self.entries = rows

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerSymmetricMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntegerSymmetricMatrix(order={self.order})"

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.order))

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def matvec(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Exact product with an integer (or rational) vector."""
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.entries)

    def is_laplacian_like(self) -> bool:
        """Zero row sums and nonpositive off-diagonal entries."""
        return all(s == 0 for s in self.row_sums()) and all(
            self.entries[i][j] <= 0
            for i in range(self.order)
            for j in range(self.order)
            if i != j
        )

    def as_object_array(self) -> np.ndarray:
        array = np.empty((self.order, self.order), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def as_float_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.float64)


def transmissions(d: DistanceMatrix) -> TransmissionVector:
    return TransmissionVector([sum(row) for row in d.entries])


def distance_laplacian(d: DistanceMatrix) -> IntegerSymmetricMatrix:
    """``T - D``: transmissions on the diagonal, negated distances elsewhere."""
    t = transmissions(d)
    return IntegerSymmetricMatrix(
        [
            [t[i] if i == j else -value for j, value in enumerate(row)]
            for i, row in enumerate(d.entries)
        ]
    )


def distance_matrix(d: DistanceMatrix) -> IntegerSymmetricMatrix:
    return IntegerSymmetricMatrix(d.entries)


def graph_transmissions(g: Graph) -> TransmissionVector:
    return transmissions(all_pairs_distances(g))


def graph_distance_laplacian(g: Graph) -> IntegerSymmetricMatrix:
    return distance_laplacian(all_pairs_distances(g))
