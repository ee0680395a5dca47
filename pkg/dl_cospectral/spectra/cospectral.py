"""Spectral comparisons and distance parameters of connected graphs."""

from fractions import Fraction

from dl_cospectral.core.config import settings
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.isomorphism import are_isomorphic
from dl_cospectral.spectra.charpoly import CharPoly, char_poly
from dl_cospectral.spectra.eigen import Spectrum, eigenvalues_float
from dl_cospectral.spectra.matrices import (
    distance_laplacian,
    distance_matrix,
    graph_transmissions,
)


def dl_char_poly(g: Graph) -> CharPoly:
    """Characteristic polynomial of the distance Laplacian of ``g``."""
    return char_poly(distance_laplacian(all_pairs_distances(g)))


def d_char_poly(g: Graph) -> CharPoly:
    """Characteristic polynomial of the distance matrix of ``g``."""
    return char_poly(distance_matrix(all_pairs_distances(g)))


def dl_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_float(distance_laplacian(all_pairs_distances(g)))


def distance_spectrum(g: Graph) -> Spectrum:
    """Eigenvalues of the distance matrix; use ``descending()`` for the usual order."""
    return eigenvalues_float(distance_matrix(all_pairs_distances(g)))


def are_dl_cospectral(g: Graph, h: Graph, relaxed: bool = False) -> bool:
    """
    Decide distance Laplacian cospectrality from exact polynomials.

    Args:
        g: Connected graph
        h: Connected graph
        relaxed: When True only polynomial equality is checked; otherwise the
            graphs must also be non-isomorphic

    Raises:
        DisconnectedGraphError: If either graph is disconnected
    """
    if g.order != h.order:
        return False
    if dl_char_poly(g) != dl_char_poly(h):
        return False
    return relaxed or not are_isomorphic(g, h)


def are_d_cospectral(g: Graph, h: Graph, relaxed: bool = False) -> bool:
    """Same as ``are_dl_cospectral`` for the distance matrix."""
    if g.order != h.order:
        return False
    if d_char_poly(g) != d_char_poly(h):
        return False
    return relaxed or not are_isomorphic(g, h)


def wiener_index(g: Graph) -> int:
    return graph_transmissions(g).total // 2


def average_transmission(g: Graph) -> Fraction:
    """Trace of the distance Laplacian divided by the order, in lowest terms."""
    return Fraction(graph_transmissions(g).total, g.order)


def is_transmission_regular(g: Graph) -> bool:
    return graph_transmissions(g).is_regular()


def dl_second_eigenvalue_bound(g: Graph) -> bool:
    """True when the second smallest distance Laplacian eigenvalue is at least the order."""
    if g.order == 1:
        return True
    return dl_spectrum(g)[1] >= g.order - settings.DL_EIGEN_TOLERANCE
