"""
Cousin sets and the two edge-switch constructions built on them.

A cousin set ``((v1, v2), (v3, v4))`` in a connected graph of order at least
five has every other vertex ``u`` equidistant from ``v1`` and ``v2`` and from
``v3`` and ``v4``, and the distance sums from those other vertices to ``v1``
and to ``v3`` agree. Adding ``v1v2`` or ``v3v4`` (the inner switch), or
``v1v3`` or ``v2v4`` (the cross switch), then leaves every distance from the
other vertices unchanged, and the two results are similar through a
reflection acting on ``v1..v4`` only.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from dl_cospectral.core.exceptions import ConstructionError, HypothesisError
from dl_cospectral.graphs.distances import all_pairs_distances, is_connected
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.isomorphism import are_isomorphic
from dl_cospectral.graphs.operators import add_edge
from dl_cospectral.spectra.cospectral import dl_char_poly
from dl_cospectral.spectra.matrices import distance_laplacian

logger = logging.getLogger(__name__)

GraphPair = Tuple[Graph, Graph]


class Involution(enum.Enum):
    """
    The two vertex involutions of ``(v1, v2, v3, v4)`` used by the switches.

    ``REVERSE`` swaps ``v1 <-> v4`` and ``v2 <-> v3``; ``SWAP`` swaps
    ``v1 <-> v3`` and ``v2 <-> v4``. Each comes with the reflection
    ``I - a a^T / 2`` whose axis ``a`` is a +-1 vector.
    """

    REVERSE = "reverse"
    SWAP = "swap"

    @property
    def permutation(self) -> Tuple[int, int, int, int]:
        return (3, 2, 1, 0) if self is Involution.REVERSE else (2, 3, 0, 1)

    @property
    def axis(self) -> Tuple[int, int, int, int]:
        return (1, -1, -1, 1) if self is Involution.REVERSE else (1, -1, 1, -1)

    def block(self) -> Tuple[Tuple[Fraction, ...], ...]:
        a = self.axis
        return tuple(
            tuple(Fraction(int(i == j)) - Fraction(a[i] * a[j], 2) for j in range(4))
            for i in range(4)
        )


@dataclass(frozen=True)
class CousinSet:
    """
    Attributes:
        host: Graph holding the cousins
        pairs: ``((v1, v2), (v3, v4))``
    """

    host: Graph
    pairs: Tuple[Tuple[int, int], Tuple[int, int]]

    @property
    def vertices(self) -> Tuple[int, int, int, int]:
        (v1, v2), (v3, v4) = self.pairs
        return v1, v2, v3, v4

    @property
    def u_set(self) -> List[int]:
        chosen = set(self.vertices)
        return [u for u in self.host.vertices() if u not in chosen]

    def violations(self) -> List[str]:
        """Reasons this is not a cousin set of its host; empty when it is."""
        g = self.host
        vertices = self.vertices
        for v in vertices:
            g.check_vertex(v)
        if len(set(vertices)) != 4:
            return [f"vertices {vertices} are not distinct"]
        if g.order < 5:
            return [f"host order {g.order} is below 5"]
        if not is_connected(g):
            return ["host is disconnected"]
        d = all_pairs_distances(g)
        v1, v2, v3, v4 = vertices
        problems = []
        for u in self.u_set:
            if d[u, v1] != d[u, v2]:
                problems.append(f"d({u}, {v1}) != d({u}, {v2})")
            if d[u, v3] != d[u, v4]:
                problems.append(f"d({u}, {v3}) != d({u}, {v4})")
        first = sum(d[u, v1] for u in self.u_set)
        second = sum(d[u, v3] for u in self.u_set)
        if first != second:
            problems.append(f"distance sums {first} and {second} differ")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise HypothesisError(f"{self.pairs} is not a cousin set: {'; '.join(problems)}")


def _orbit_minimum(a: int, b: int, c: int, d: int) -> Tuple[int, int, int, int]:
    return min((a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a))


def find_cousin_sets(g: Graph) -> List[CousinSet]:
    """
    All cousin sets of ``g``, one per class under swapping both pairs
    internally at once and under exchanging the two pairs.

    Those symmetries map each switch construction to itself.

    Raises:
        HypothesisError: If ``g`` has fewer than five vertices
        DisconnectedGraphError: If ``g`` is disconnected
    """
    if g.order < 5:
        raise HypothesisError(f"cousin sets need order >= 5, got {g.order}")
    d = all_pairs_distances(g)
    n = g.order

    # For each ordered pair, the other vertices that see the two at different distances
    separating = {}
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            mask = 0
            for u in range(n):
                if u not in (x, y) and d[u, x] != d[u, y]:
                    mask |= 1 << u
            if mask.bit_count() <= 2:
                separating[x, y] = mask

    found = []
    for (v1, v2), first_mask in separating.items():
        for (v3, v4), second_mask in separating.items():
            quad = (v1, v2, v3, v4)
            if len(set(quad)) != 4 or _orbit_minimum(*quad) != quad:
                continue
            if first_mask & ~((1 << v3) | (1 << v4)) or second_mask & ~((1 << v1) | (1 << v2)):
                continue
            others = [u for u in range(n) if u not in quad]
            if sum(d[u, v1] for u in others) == sum(d[u, v3] for u in others):
                found.append(CousinSet(g, ((v1, v2), (v3, v4))))
    return found


def _induced_on(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices`` with vertex ``vertices[i]`` relabeled ``i``."""
    return Graph(
        4,
        [(i, j) for i in range(4) for j in range(i + 1, 4) if g.adjacent(vertices[i], vertices[j])],
    )


def _maps_by(perm: Sequence[int], source: Graph, target: Graph) -> bool:
    return all(target.adjacent(perm[u], perm[v]) for u, v in source.edges()) and (
        source.edge_count == target.edge_count
    )


def _checked_pair(first: Graph, second: Graph, label: str) -> Optional[GraphPair]:
    if are_isomorphic(first, second):
        logger.debug(f"{label} produced isomorphic graphs")
        return None
    if dl_char_poly(first) != dl_char_poly(second):
        raise ConstructionError(f"{label} produced graphs with different distance Laplacian polynomials")
    return first, second


def inner_switch_pair(g: Graph, c: CousinSet) -> Optional[GraphPair]:
    """
    ``(g + v1v2, g + v3v4)`` for a cousin set whose pairs are non-edges.

    Args:
        g: Connected host graph
        c: Cousin set of ``g``

    Returns:
        Optional[Tuple[Graph, Graph]]: The pair when ``v1v2`` and ``v3v4`` are
        non-edges, the two induced subgraphs on ``v1..v4`` after the edge
        additions are isomorphic and the two results are not isomorphic;
        None otherwise

    Raises:
        HypothesisError: If ``c`` is not a cousin set of ``g``
        ConstructionError: If an emitted pair is not cospectral
    """
    if c.host != g:
        c = CousinSet(g, c.pairs)
    c.validate()
    v1, v2, v3, v4 = c.vertices
    if g.adjacent(v1, v2) or g.adjacent(v3, v4):
        return None
    first, second = add_edge(g, v1, v2), add_edge(g, v3, v4)
    quad = c.vertices
    if not are_isomorphic(_induced_on(first, quad), _induced_on(second, quad)):
        return None
    return _checked_pair(first, second, f"inner switch on {c.pairs}")


def neighbour_cover_holds(g: Graph, c: CousinSet) -> bool:
    """Every common neighbour of ``v1, v2`` sees a common neighbour of ``v3, v4``, and back."""
    v1, v2, v3, v4 = c.vertices
    rows = g.rows
    common_first = rows[v1] & rows[v2]
    common_second = rows[v3] & rows[v4]
    return all(rows[x] & common_second for x in g.vertices() if common_first >> x & 1) and all(
        rows[y] & common_first for y in g.vertices() if common_second >> y & 1
    )


def cross_switch_pair(g: Graph, c: CousinSet) -> Optional[GraphPair]:
    """
    ``(g + v1v3, g + v2v4)`` for a cousin set meeting the cross conditions.

    The conditions are: ``v1v3`` and ``v2v4`` are non-edges, ``REVERSE`` maps
    the induced subgraph of ``g + v1v3`` on ``v1..v4`` onto that of
    ``g + v2v4``, and the neighbour cover holds. When only ``SWAP`` works the
    two results are isomorphic and nothing is returned.

    Raises:
        HypothesisError: If ``c`` is not a cousin set of ``g``
        ConstructionError: If an emitted pair is not cospectral
    """
    if c.host != g:
        c = CousinSet(g, c.pairs)
    c.validate()
    v1, v2, v3, v4 = c.vertices
    if g.adjacent(v1, v3) or g.adjacent(v2, v4):
        return None
    first, second = add_edge(g, v1, v3), add_edge(g, v2, v4)
    quad = c.vertices
    if not _maps_by(Involution.REVERSE.permutation, _induced_on(first, quad), _induced_on(second, quad)):
        return None
    if not neighbour_cover_holds(g, c):
        return None
    return _checked_pair(first, second, f"cross switch on {c.pairs}")


def similarity_matrix(which: Involution, n: int = 4) -> Tuple[Tuple[Fraction, ...], ...]:
    """The reflection of ``which`` on the first four coordinates, identity on the rest."""
    if n < 4:
        raise ValueError(f"similarity matrix needs n >= 4, got {n}")
    block = which.block()
    return tuple(
        tuple(
            block[i][j] if i < 4 and j < 4 else Fraction(int(i == j))
            for j in range(n)
        )
        for i in range(n)
    )


def verify_cousin_similarity(g1: Graph, g2: Graph, c: CousinSet, which: Involution) -> bool:
    """
    Check ``S L(g1) S = L(g2)`` exactly, with ``L`` the distance Laplacian and
    ``S`` the reflection of ``which`` acting on ``v1..v4``.

    Raises:
        HypothesisError: If the orders differ or do not match the cousin host
    """
    if g1.order != g2.order or g1.order != c.host.order:
        raise HypothesisError(
            f"orders {g1.order}, {g2.order} and host order {c.host.order} do not match"
        )
    n = g1.order
    quad = list(c.vertices)
    order = quad + [v for v in range(n) if v not in quad]

    def reordered(g: Graph) -> np.ndarray:
        laplacian = distance_laplacian(all_pairs_distances(g))
        array = np.empty((n, n), dtype=object)
        for i, a in enumerate(order):
            for j, b in enumerate(order):
                array[i, j] = Fraction(laplacian[a, b])
        return array

    s = np.array(similarity_matrix(which, n), dtype=object)
    return bool((s.dot(reordered(g1)).dot(s) == reordered(g2)).all())


def four_vertex_switch_cases() -> List[Tuple[Graph, bool, bool]]:
    """
    Every graph ``H`` on ``0..3`` without edges ``01`` and ``23`` for which
    ``H + 01`` and ``H + 23`` are isomorphic, with whether ``REVERSE`` and
    ``SWAP`` are such isomorphisms.
    """
    free = [(0, 2), (0, 3), (1, 2), (1, 3)]
    cases = []
    for chosen in itertools.product((False, True), repeat=len(free)):
        h = Graph(4, [edge for edge, keep in zip(free, chosen) if keep])
        first, second = add_edge(h, 0, 1), add_edge(h, 2, 3)
        if not are_isomorphic(first, second):
            continue
        cases.append(
            (
                h,
                _maps_by(Involution.REVERSE.permutation, first, second),
                _maps_by(Involution.SWAP.permutation, first, second),
            )
        )
    return cases


def four_vertex_switch_check() -> bool:
    """True when ``REVERSE`` or ``SWAP`` works in every isomorphic case."""
    return all(reverse or swap for _, reverse, swap in four_vertex_switch_cases())


def verify_distance_preservation(g: Graph, c: CousinSet, mode: str) -> bool:
    """
    Recompute distances after both edge additions and compare, for every
    ``u`` outside the cousin set, with the distances in ``g``.

    Args:
        g: Host graph
        c: Cousin set of ``g``
        mode: ``"inner"`` (adds ``v1v2`` and ``v3v4``) or ``"cross"`` (adds
            ``v1v3`` and ``v2v4``, needs the neighbour cover)

    Raises:
        HypothesisError: If the hypotheses of the chosen mode fail
    """
    if c.host != g:
        c = CousinSet(g, c.pairs)
    c.validate()
    v1, v2, v3, v4 = c.vertices
    if mode == "inner":
        edges = ((v1, v2), (v3, v4))
    elif mode == "cross":
        edges = ((v1, v3), (v2, v4))
        if not neighbour_cover_holds(g, c):
            raise HypothesisError(f"neighbour cover fails for {c.pairs}")
    else:
        raise ValueError(f"Unknown preservation mode: {mode}")
    for u, v in edges:
        if g.adjacent(u, v):
            raise HypothesisError(f"{u}{v} is already an edge, the {mode} switch does not apply")

    base = all_pairs_distances(g)
    switched = [all_pairs_distances(add_edge(g, u, v)) for u, v in edges]
    return all(d.row(u) == base.row(u) for d in switched for u in c.u_set)