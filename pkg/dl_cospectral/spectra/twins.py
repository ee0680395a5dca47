"""Exact eigenvector checks for a pair of independent twins."""

import logging
from dataclasses import dataclass

from dl_cospectral.core.exceptions import HypothesisError
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.operators import add_edge
from dl_cospectral.spectra.charpoly import CharPoly, char_poly
from dl_cospectral.spectra.matrices import distance_laplacian, transmissions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinEigenRecord:
    """
    Outcome of the twin eigenstructure checks.

    Attributes:
        transmission: Common transmission ``t`` of the twins in ``g``
        eigenvector_in_graph: ``e_u - e_v`` has eigenvalue ``t + 2`` in ``g``
        eigenvector_after_edge: ``e_u - e_v`` has eigenvalue ``t`` in ``g + uv``
        spectra_differ_by_shift: Removing ``x - t - 2`` from the polynomial of
            ``g`` and ``x - t`` from that of ``g + uv`` leaves the same quotient
    """

    transmission: int
    eigenvector_in_graph: bool
    eigenvector_after_edge: bool
    spectra_differ_by_shift: bool
    polynomial: CharPoly
    polynomial_after_edge: CharPoly

    @property
    def passed(self) -> bool:
        return self.eigenvector_in_graph and self.eigenvector_after_edge and self.spectra_differ_by_shift


def are_independent_twins(g: Graph, u: int, v: int) -> bool:
    return u != v and not g.adjacent(u, v) and g.neighbor_mask(u) == g.neighbor_mask(v)


def _is_eigenvector(laplacian, u: int, v: int, eigenvalue: int) -> bool:
    vector = [0] * laplacian.order
    vector[u], vector[v] = 1, -1
    return laplacian.matvec(vector) == tuple(eigenvalue * x for x in vector)


def verify_twin_eigenstructure(g: Graph, u: int, v: int) -> TwinEigenRecord:
    """
    Check the eigenstructure that a pair of independent twins forces.

    Args:
        g: Connected graph
        u: First twin
        v: Second twin

    Returns:
        TwinEigenRecord: Results of the three exact checks

    Raises:
        HypothesisError: If ``u`` and ``v`` are not independent twins
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if not are_independent_twins(g, u, v):
        raise HypothesisError(f"vertices {u} and {v} are not independent twins")

    before = distance_laplacian(all_pairs_distances(g))
    after = distance_laplacian(all_pairs_distances(add_edge(g, u, v)))
    t = transmissions(all_pairs_distances(g))[u]

    p_before = char_poly(before)
    p_after = char_poly(after)
    quotient_before, remainder_before = p_before.divide_by_linear(t + 2)
    quotient_after, remainder_after = p_after.divide_by_linear(t)

    record = TwinEigenRecord(
        transmission=t,
        eigenvector_in_graph=_is_eigenvector(before, u, v, t + 2),
        eigenvector_after_edge=_is_eigenvector(after, u, v, t),
        spectra_differ_by_shift=(
            remainder_before == 0 and remainder_after == 0 and quotient_before == quotient_after
        ),
        polynomial=p_before,
        polynomial_after_edge=p_after,
    )
    if not record.passed:
        logger.warning(f"Twin eigenstructure check failed for twins {u}, {v}: {record}")
    return record
