"""
Isomorphism testing and canonical forms.

Both searches start from a partition of the vertices by a local signature
(degree, edges inside the neighbourhood, components of the neighbourhood),
refine it to an equitable partition, and then individualize one vertex of the
first non-singleton cell at a time. Every refinement step records a trace;
two branches can only lead to matching leaves when their traces agree.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import OrderLimitError
from dl_cospectral.graphs.formats import encode_graph6, parse_graph6
from dl_cospectral.graphs.graph import Graph, bits_to_mask, iter_bits
from dl_cospectral.graphs.operators import relabel

logger = logging.getLogger(__name__)

Cells = List[List[int]]
Mapping = Tuple[int, ...]

# Automorphisms remembered by one canonical search for orbit pruning
MAX_STORED_AUTOMORPHISMS = 64

_SPLIT = 0
_QUOTIENT = 1


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Labeling-independent encoding of an isomorphism class.

    ``data`` is the graph6 encoding of the graph under its canonical labeling,
    so equal forms mean isomorphic graphs and the form decodes back to a
    representative.
    """

    data: bytes

    @property
    def graph6(self) -> str:
        return self.data.decode("ascii")

    def to_graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def __str__(self) -> str:
        return self.graph6


def _neighbourhood_signature(rows: Sequence[int], v: int) -> Tuple[int, int, int]:
    nbhd = rows[v]
    inner = sum((rows[u] & nbhd).bit_count() for u in iter_bits(nbhd)) // 2
    components = 0
    rest = nbhd
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= rows[u]
            frontier = reach & rest & ~seen
            seen |= frontier
        components += 1
        rest &= ~seen
    return nbhd.bit_count(), inner, components


def _initial_cells(rows: Sequence[int]) -> Tuple[Cells, tuple]:
    groups: Dict[tuple, List[int]] = {}
    for v in range(len(rows)):
        groups.setdefault(_neighbourhood_signature(rows, v), []).append(v)
    keys = sorted(groups)
    return [groups[key] for key in keys], tuple((key, len(groups[key])) for key in keys)


def _refine(rows: Sequence[int], cells: Cells) -> Tuple[Cells, tuple]:
    """
    Split cells until every vertex of a cell has the same number of
    neighbours in each cell. Returns the equitable partition and its trace.
    """
    trace = []
    while True:
        masks = [bits_to_mask(cell) for cell in cells]
        refined: Cells = []
        split = False
        for index, cell in enumerate(cells):
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                row = rows[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            split = True
            for key in sorted(groups):
                refined.append(groups[key])
                trace.append((_SPLIT, index, key, len(groups[key])))
        cells = refined
        if not split:
            break
    quotient = tuple(tuple((rows[cell[0]] & m).bit_count() for m in masks) for cell in cells)
    trace.append((_QUOTIENT, quotient))
    return cells, tuple(trace)


def _target_cell(cells: Cells) -> Optional[int]:
    for index, cell in enumerate(cells):
        if len(cell) > 1:
            return index
    return None


def _individualize(cells: Cells, index: int, v: int) -> Cells:
    rest = [w for w in cells[index] if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1:]


def _maps_edges(g_rows: Sequence[int], h_rows: Sequence[int], mapping: Sequence[int]) -> bool:
    for v, row in enumerate(g_rows):
        image = 0
        for w in iter_bits(row):
            image |= 1 << mapping[w]
        if image != h_rows[mapping[v]]:
            return False
    return True


def _match(g_rows, h_rows, g_cells: Cells, h_cells: Cells) -> Iterator[Mapping]:
    index = _target_cell(g_cells)
    if index is None:
        mapping = [0] * len(g_rows)
        for g_cell, h_cell in zip(g_cells, h_cells):
            mapping[g_cell[0]] = h_cell[0]
        if _maps_edges(g_rows, h_rows, mapping):
            yield tuple(mapping)
        return
    v = g_cells[index][0]
    g_child, g_trace = _refine(g_rows, _individualize(g_cells, index, v))
    for w in h_cells[index]:
        h_child, h_trace = _refine(h_rows, _individualize(h_cells, index, w))
        if h_trace == g_trace:
            yield from _match(g_rows, h_rows, g_child, h_child)


def _isomorphisms(g: Graph, h: Graph) -> Iterator[Mapping]:
    if g.order != h.order or g.edge_count != h.edge_count:
        return
    g_cells, g_trace = _initial_cells(g.rows)
    h_cells, h_trace = _initial_cells(h.rows)
    if g_trace != h_trace:
        return
    g_cells, g_trace = _refine(g.rows, g_cells)
    h_cells, h_trace = _refine(h.rows, h_cells)
    if g_trace != h_trace:
        return
    yield from _match(g.rows, h.rows, g_cells, h_cells)


def brute_force_isomorphism(g: Graph, h: Graph) -> Optional[Mapping]:
    """
    Search all vertex permutations for an isomorphism from ``g`` to ``h``.

    Raises:
        OrderLimitError: If the order is above ``DL_BRUTE_FORCE_LIMIT``
    """
    limit = settings.DL_BRUTE_FORCE_LIMIT
    if g.order > limit:
        raise OrderLimitError(g.order, limit, "brute-force isomorphism order")
    if g.order != h.order or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    for perm in itertools.permutations(range(g.order)):
        if _maps_edges(g.rows, h.rows, perm):
            return perm
    return None


def find_isomorphism(g: Graph, h: Graph, method: str = "refine") -> Optional[Mapping]:
    """
    Find an isomorphism from ``g`` to ``h``.

    Args:
        g: First graph
        h: Second graph
        method: ``"refine"`` for the refinement search, ``"brute"`` for the
            permutation search (orders up to ``DL_BRUTE_FORCE_LIMIT``)

    Returns:
        Optional[Tuple[int, ...]]: ``mapping`` with ``mapping[v]`` the image
        of ``v``, or None when the graphs are not isomorphic
    """
    if method == "brute":
        return brute_force_isomorphism(g, h)
    if method != "refine":
        raise ValueError(f"Unknown isomorphism method: {method}")
    return next(_isomorphisms(g, h), None)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def has_nontrivial_automorphism(g: Graph) -> bool:
    identity = tuple(g.vertices())
    return any(mapping != identity for mapping in _isomorphisms(g, g))


class _CanonicalSearch:
    """Search tree walk that keeps the smallest graph6 over the explored leaves."""

    def __init__(self, g: Graph):
        self.g = g
        self.rows = g.rows
        self.best: Optional[str] = None
        self.best_labeling: Optional[List[int]] = None
        self.automorphisms: List[Mapping] = []
        self.leaves = 0

    def run(self) -> Tuple[str, List[int]]:
        cells, _ = _initial_cells(self.rows)
        cells, _ = _refine(self.rows, cells)
        self._visit(cells, ())
        return self.best, self.best_labeling

    def _visit(self, cells: Cells, path: Tuple[int, ...]) -> None:
        index = _target_cell(cells)
        if index is None:
            self._leaf([cell[0] for cell in cells])
            return

        children = []
        for v in cells[index]:
            child, trace = _refine(self.rows, _individualize(cells, index, v))
            children.append((trace, v, child))
        # Only the children with the largest trace are explored
        best_trace = max(trace for trace, _, _ in children)

        explored: List[int] = []
        for trace, v, child in children:
            if trace != best_trace:
                continue
            if explored and self._same_orbit(v, explored, path):
                continue
            explored.append(v)
            self._visit(child, path + (v,))

    def _same_orbit(self, v: int, explored: List[int], path: Tuple[int, ...]) -> bool:
        parent = list(self.g.vertices())

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in path):
                for x, y in enumerate(gamma):
                    parent[find(x)] = find(y)
        root = find(v)
        return any(find(u) == root for u in explored)

    def _leaf(self, labeling: List[int]) -> None:
        self.leaves += 1
        position = [0] * len(labeling)
        for p, v in enumerate(labeling):
            position[v] = p
        form = encode_graph6(relabel(self.g, position))
        if self.best is None or form < self.best:
            self.best = form
            self.best_labeling = labeling
        elif form == self.best and len(self.automorphisms) < MAX_STORED_AUTOMORPHISMS:
            gamma = [0] * len(labeling)
            for a, b in zip(self.best_labeling, labeling):
                gamma[a] = b
            self.automorphisms.append(tuple(gamma))


def canonical_labeling(g: Graph) -> Tuple[CanonicalForm, Mapping]:
    """
    Canonical form of ``g`` together with the relabeling that produces it.

    Returns:
        Tuple[CanonicalForm, Tuple[int, ...]]: The form and ``position`` with
        ``position[v]`` the canonical label of ``v``

    Raises:
        OrderLimitError: If the order is above ``DL_CANONICAL_LIMIT``
    """
    limit = settings.DL_CANONICAL_LIMIT
    if g.order > limit:
        raise OrderLimitError(g.order, limit, "canonical form order")
    search = _CanonicalSearch(g)
    form, labeling = search.run()
    logger.debug(f"Canonical search on order {g.order} explored {search.leaves} leaves")
    position = [0] * g.order
    for p, v in enumerate(labeling):
        position[v] = p
    return CanonicalForm(form.encode("ascii")), tuple(position)


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]
