"""Graph representation, codecs, distances, isomorphism and graph operators."""

from dl_cospectral.graphs.graph import DistanceMatrix, Graph

__all__ = ["DistanceMatrix", "Graph"]
