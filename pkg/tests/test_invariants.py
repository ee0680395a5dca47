"""Unit tests for structural parameters, cliques, planarity and profiles."""

from fractions import Fraction

import networkx as nx
import pytest

from dl_cospectral.constructions.families import (
    circulant,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import OrderLimitError, SchemaError
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.operators import cartesian_product, relabel
from dl_cospectral.invariants.cliques import clique_number, independence_number
from dl_cospectral.invariants.planarity import cyclic_labeling, is_circulant, is_planar, to_networkx
from dl_cospectral.invariants.profile import (
    PROFILE_FIELDS,
    ParameterProfile,
    compare_profiles,
    profile,
)
from dl_cospectral.invariants.structure import (
    distance_multiset,
    girth,
    has_cut_vertex,
    has_dominating_vertex,
    has_leaf,
    is_bipartite,
    is_regular,
    is_tree,
)

from tests.factories import RandomGraphFactory, relabeled

PETERSEN = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)


class TestStructure:
    """Unit tests for structural parameters."""

    def test_girth(self):
        """Test shortest cycle lengths."""
        assert girth(cycle_graph(5)) == 5
        assert girth(complete_graph(4)) == 3
        assert girth(cartesian_product(cycle_graph(4), complete_graph(2))) == 4
        assert girth(PETERSEN) == 5
        assert girth(path_graph(6)) == 0

    def test_girth_matches_networkx(self):
        """Test girth against networkx on random graphs."""
        for _ in range(15):
            g = RandomGraphFactory(order=8, density=0.3)
            basis = nx.minimum_cycle_basis(to_networkx(g))
            assert girth(g) == min((len(cycle) for cycle in basis), default=0)

    def test_bipartite(self):
        """Test bipartiteness."""
        assert is_bipartite(cycle_graph(6))
        assert not is_bipartite(cycle_graph(5))
        assert is_bipartite(Graph(3))

    def test_vertex_properties(self):
        """Test leaves, dominating vertices and cut vertices."""
        assert has_leaf(path_graph(3))
        assert not has_leaf(cycle_graph(4))
        assert has_dominating_vertex(star_graph(3))
        assert not has_dominating_vertex(cycle_graph(5))
        assert has_cut_vertex(path_graph(3))
        assert not has_cut_vertex(cycle_graph(4))
        assert not has_cut_vertex(complete_graph(2))

    def test_tree_and_regular(self):
        """Test tree and regularity recognition."""
        assert is_tree(star_graph(4))
        assert not is_tree(cycle_graph(4))
        assert not is_tree(Graph(4, [(0, 1), (1, 2), (0, 2)]))
        assert is_regular(PETERSEN)
        assert not is_regular(path_graph(3))

    def test_distance_multiset(self):
        """Test the distance counts of a path."""
        assert distance_multiset(all_pairs_distances(path_graph(4))) == ((1, 3), (2, 2), (3, 1))


class TestCliques:
    """Unit tests for clique and independence numbers."""

    def test_known_values(self, srg_pair):
        """Test clique numbers of known graphs."""
        shrikhande, rook = srg_pair

        assert clique_number(complete_graph(5)) == 5
        assert clique_number(shrikhande) == 3
        assert clique_number(rook) == 4
        assert independence_number(cycle_graph(5)) == 2
        assert independence_number(PETERSEN) == 4
        assert independence_number(Graph(4)) == 4

    def test_matches_networkx(self):
        """Test clique numbers against networkx on random graphs."""
        for _ in range(20):
            g = RandomGraphFactory(order=9, density=0.5)
            expected = max(len(c) for c in nx.find_cliques(to_networkx(g)))
            assert clique_number(g) == expected


class TestPlanarity:
    """Unit tests for planarity and circulant recognition."""

    def test_planarity(self):
        """Test planar and non-planar graphs."""
        assert is_planar(complete_graph(4))
        assert not is_planar(complete_graph(5))
        assert not is_planar(complete_bipartite_graph(3, 3))
        assert not is_planar(PETERSEN)
        assert is_planar(path_graph(2))

    def test_planarity_limit(self):
        """Test that orders above DL_PLANARITY_LIMIT are refused."""
        settings.configure(DL_PLANARITY_LIMIT=6)

        with pytest.raises(OrderLimitError):
            is_planar(path_graph(7))

    def test_circulants(self):
        """Test circulant recognition."""
        assert is_circulant(cycle_graph(7))
        assert is_circulant(complete_bipartite_graph(3, 3))
        assert is_circulant(relabeled(circulant(10, [1, 3])))
        assert not is_circulant(PETERSEN)
        assert not is_circulant(path_graph(4))

    def test_cyclic_labeling(self):
        """Test that the labeling found makes adjacency depend on the difference only."""
        g = relabeled(circulant(9, [1, 3]))
        labeling = cyclic_labeling(g)
        position = [0] * g.order
        for p, v in enumerate(labeling):
            position[v] = p
        h = relabel(g, position)

        for p in h.vertices():
            for q in h.vertices():
                assert h.adjacent(p, q) == h.adjacent(0, (q - p) % h.order)

    def test_circulant_limit(self):
        """Test that orders above DL_CIRCULANT_LIMIT are refused."""
        with pytest.raises(OrderLimitError):
            is_circulant(cycle_graph(11))


class TestProfile:
    """Unit tests for parameter profiles."""

    def test_path_profile(self):
        """Test every field of the path on four vertices."""
        p = profile(path_graph(4))

        assert p.order == 4
        assert p.edge_count == 3
        assert p.degree_sequence == (1, 1, 2, 2)
        assert p.transmission_sequence == (4, 4, 6, 6)
        assert p.diameter == 3
        assert p.girth == 0
        assert p.wiener_index == 10
        assert p.average_transmission == Fraction(5)
        assert p.complement_components == 1
        assert p.has_leaf and p.has_cut_vertex and p.has_nontrivial_automorphism
        assert not p.has_dominating_vertex
        assert p.clique_number == 2 and p.independence_number == 2
        assert p.is_bipartite and p.is_tree
        assert not p.is_regular and not p.is_transmission_regular
        assert p.srg_parameters is None
        assert p.is_planar is True
        assert p.is_circulant is False

    def test_json(self):
        """Test the JSON form and its schema."""
        record = profile(cycle_graph(5)).to_json()

        assert list(record) == list(PROFILE_FIELDS)
        assert record["srg_parameters"] == [5, 2, 0, 1]
        assert record["distance_multiset"] == [[1, 5], [2, 5]]
        assert record["average_transmission"] == "6"
        assert ParameterProfile.from_json(record) == profile(cycle_graph(5))

    def test_invalid_json(self):
        """Test that records violating the schema raise SchemaError."""
        record = profile(path_graph(3)).to_json()
        record["clique_number"] = 0

        with pytest.raises(SchemaError):
            ParameterProfile.from_json(record)
        del record["clique_number"]
        with pytest.raises(SchemaError):
            ParameterProfile.from_json(record)

    def test_limits_leave_fields_unevaluated(self):
        """Test that planarity and circulant recognition are skipped above their limits."""
        settings.configure(DL_PLANARITY_LIMIT=5)
        p = profile(path_graph(11))

        assert p.is_planar is None
        assert p.is_circulant is None
        assert p.to_json()["is_planar"] is None

    def test_b1_pair_differences(self, b1_pair):
        """Test the parameters on which the B_1 pair differs."""
        differences = compare_profiles(*map(profile, b1_pair))

        assert "is_planar" in differences
        for name in ("order", "edge_count", "wiener_index", "is_bipartite"):
            assert name not in differences

    def test_strongly_regular_differences(self, srg_pair):
        """Test that the clique number separates the (16, 6, 2, 2) graphs."""
        differences = compare_profiles(*map(profile, srg_pair))

        assert "clique_number" in differences
        assert "srg_parameters" not in differences
        assert "transmission_sequence" not in differences
