"""Exact clique and independence numbers by branch and bound on bitsets."""

from typing import List, Sequence, Tuple

from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.operators import complement


def _colour_order(rows: Sequence[int], candidates: int) -> Tuple[List[int], List[int]]:
    """
    Greedy colouring of the candidates.

    Returns the vertices in colour order with the colour of each; a vertex
    with colour ``c`` cannot extend a clique by more than ``c`` vertices
    drawn from the vertices up to it.
    """
    order, colours = [], []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~rows[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def clique_number(g: Graph) -> int:
    rows = g.rows
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        order, colours = _colour_order(rows, candidates)
        for index in range(len(order) - 1, -1, -1):
            if size + colours[index] <= best:
                return
            v = order[index]
            inside = candidates & rows[v]
            if inside:
                expand(size + 1, inside)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~(1 << v)

    expand(0, (1 << g.order) - 1)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))
