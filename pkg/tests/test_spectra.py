"""Unit tests for distance matrices, exact polynomials and spectra."""

import itertools
from fractions import Fraction
from unittest.mock import patch

import numpy as np
import pytest

from dl_cospectral.constructions.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from dl_cospectral.core.exceptions import GraphError, HypothesisError, NotATreeError, NumericalError
from dl_cospectral.graphs.distances import all_pairs_distances
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.spectra.charpoly import CharPoly, char_poly
from dl_cospectral.spectra.coefficients import (
    coefficient_report,
    coefficients_csv,
    is_unimodal,
    normalized_tree_coefficients,
    peak_index,
)
from dl_cospectral.spectra.cospectral import (
    are_d_cospectral,
    are_dl_cospectral,
    average_transmission,
    d_char_poly,
    distance_spectrum,
    dl_char_poly,
    dl_second_eigenvalue_bound,
    dl_spectrum,
    is_transmission_regular,
    wiener_index,
)
from dl_cospectral.spectra.eigen import Spectrum, eigenvalues_float, elementary_symmetric
from dl_cospectral.spectra.matrices import (
    IntegerSymmetricMatrix,
    distance_laplacian,
    graph_distance_laplacian,
    graph_transmissions,
)
from dl_cospectral.spectra.twins import are_independent_twins, verify_twin_eigenstructure

from tests.conftest import B1_POLYNOMIAL
from tests.factories import ConnectedGraphFactory, planted_twins, relabeled

K4_POLYNOMIAL = "x^4 - 12x^3 + 48x^2 - 64x"


def _leibniz_char_poly_at(m: IntegerSymmetricMatrix, x: int) -> int:
    """``det(xI - m)`` summed over all permutations."""
    n = m.order
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= (x if i == perm[i] else 0) - m[i, perm[i]]
        total += term
    return total


class TestMatrices:
    """Unit tests for transmissions and the distance Laplacian."""

    def test_path_laplacian(self):
        """Test the distance Laplacian of the path on three vertices."""
        laplacian = graph_distance_laplacian(path_graph(3))

        assert laplacian.entries == ((3, -1, -2), (-1, 2, -1), (-2, -1, 3))
        assert laplacian.trace == 8
        assert laplacian.is_laplacian_like()

    def test_random_laplacians(self):
        """Test zero row sums and the trace identity on random graphs."""
        for _ in range(10):
            g = ConnectedGraphFactory()
            laplacian = distance_laplacian(all_pairs_distances(g))
            assert laplacian.row_sums() == (0,) * g.order
            assert laplacian.trace == graph_transmissions(g).total

    def test_asymmetric_matrix(self):
        """Test that asymmetric entries are rejected."""
        with pytest.raises(GraphError):
            IntegerSymmetricMatrix([[0, 1], [2, 0]])

    def test_transmissions(self):
        """Test transmissions of a star."""
        t = graph_transmissions(star_graph(3))

        assert list(t) == [3, 5, 5, 5]
        assert t.sorted() == (3, 5, 5, 5)
        assert not t.is_regular()


class TestCharPoly:
    """Unit tests for the CharPoly class and the exact recurrence."""

    def test_known_polynomials(self):
        """Test small distance Laplacian polynomials."""
        assert dl_char_poly(complete_graph(3)).coefficients == (0, 9, -6, 1)
        assert dl_char_poly(path_graph(3)) == CharPoly.parse("x^3 - 8x^2 + 15x")
        assert str(dl_char_poly(complete_graph(4))) == K4_POLYNOMIAL

    def test_matches_leibniz_expansion(self):
        """Test the recurrence against the permutation expansion of the determinant."""
        for _ in range(12):
            g = ConnectedGraphFactory(order=5)
            laplacian = graph_distance_laplacian(g)
            poly = char_poly(laplacian)
            for x in range(g.order + 1):
                assert poly.evaluate(x) == _leibniz_char_poly_at(laplacian, x)

    def test_parse_forms(self):
        """Test superscripts, Unicode minus signs and constant terms."""
        assert CharPoly.parse("x⁴ − 12x³ + 48x² − 64x") == CharPoly.parse(K4_POLYNOMIAL)
        assert CharPoly.parse("x^2 - 1").coefficients == (-1, 0, 1)

    @pytest.mark.parametrize("text", ["", "2x^2 + y", "x^a"])
    def test_parse_errors(self, text):
        """Test that unparseable text raises ValueError."""
        with pytest.raises(ValueError):
            CharPoly.parse(text)

    def test_not_monic(self):
        """Test that non-monic coefficient tuples are refused."""
        with pytest.raises(ValueError, match="monic"):
            CharPoly((1, 2))

    def test_key_round_trip(self):
        """Test the bucket key."""
        assert B1_POLYNOMIAL.key().startswith("0,-90671880,")
        assert CharPoly.from_key(B1_POLYNOMIAL.key()) == B1_POLYNOMIAL

    def test_divide_by_linear(self):
        """Test synthetic division and root multiplicities."""
        poly = CharPoly.parse(K4_POLYNOMIAL)
        quotient, remainder = poly.divide_by_linear(4)

        assert remainder == 0
        assert quotient == CharPoly.parse("x^3 - 8x^2 + 16x")
        assert poly.root_multiplicity(4) == 3
        assert poly.root_multiplicity(0) == 1
        assert poly.divide_by_linear(1)[1] == poly.evaluate(1)

    def test_from_integer_roots(self):
        """Test building a polynomial from its roots."""
        assert CharPoly.from_integer_roots([0, 4, 4, 4]) == CharPoly.parse(K4_POLYNOMIAL)

    def test_str(self):
        """Test rendering of signs, unit coefficients and constants."""
        assert str(CharPoly((-4, -6, 0, 1))) == "x^3 - 6x - 4"
        assert str(CharPoly((1,))) == "1"

    def test_distance_polynomial(self):
        """Test the distance polynomial of the path on three vertices."""
        assert d_char_poly(path_graph(3)) == CharPoly.parse("x^3 - 6x - 4")

    @pytest.mark.slow
    def test_order_cap_polynomial(self):
        """Test exact arithmetic on the cycle of order 64."""
        poly = dl_char_poly(cycle_graph(64))

        assert poly.degree == 64
        assert poly.coefficients[63] == -64 * 1024
        assert poly.root_multiplicity(0) == 1


class TestSpectrum:
    """Unit tests for floating-point spectra."""

    def test_eigenvalues_float(self):
        """Test the eigenvalues of the distance Laplacian of P3."""
        spectrum = eigenvalues_float(graph_distance_laplacian(path_graph(3)))

        assert list(spectrum.eigenvalues) == pytest.approx([0.0, 3.0, 5.0], abs=1e-9)
        assert spectrum.multiplicity(3.0) == 1

    def test_eigenvalues_residual_too_large(self):
        """Test that a decomposition missing the residual tolerance raises NumericalError."""
        # Arrange
        m = graph_distance_laplacian(path_graph(3))
        wrong = (np.array([0.0, 1.0, 2.0]), np.eye(3))

        # Act
        with patch("dl_cospectral.spectra.eigen.np.linalg.eigh", return_value=wrong):
            with pytest.raises(NumericalError) as excinfo:
                eigenvalues_float(m)

        # Assert
        assert excinfo.value.residual > 1.0

    def test_complete_graph(self):
        """Test grouping of the spectrum of K4."""
        spectrum = dl_spectrum(complete_graph(4))

        assert [count for _, count in spectrum.grouped()] == [1, 3]
        assert spectrum.grouped()[1][0] == pytest.approx(4.0)
        assert spectrum.multiplicity(4.0) == 3

    def test_roots_of_polynomial(self):
        """Test that every eigenvalue is a root of the exact polynomial."""
        g = ConnectedGraphFactory(order=7)
        poly = dl_char_poly(g)
        coefficients = [float(c) for c in poly.coefficients]
        scale = max(abs(c) for c in coefficients)
        for value in dl_spectrum(g):
            residual = sum(c * value**k for k, c in enumerate(coefficients))
            assert abs(residual) <= 1e-6 * scale * max(1.0, abs(value)) ** g.order

    def test_distance_spectrum_of_shrikhande(self, srg_pair):
        """Test the distance spectrum {24, 0^9, -4^6} of the Shrikhande graph."""
        spectrum = distance_spectrum(srg_pair[0])

        assert spectrum.descending()[0] == pytest.approx(24.0)
        assert spectrum.multiplicity(0.0) == 9
        assert spectrum.multiplicity(-4.0) == 6

    def test_from_multiplicities(self):
        """Test building and comparing spectra from multiplicities."""
        expected = Spectrum.from_multiplicities([(0, 1), (4, 3)])

        assert dl_spectrum(complete_graph(4)).matches(expected)
        assert not dl_spectrum(cycle_graph(4)).matches(expected)
        assert expected.to_json() == [
            {"value": 0.0, "multiplicity": 1},
            {"value": 4.0, "multiplicity": 3},
        ]

    def test_elementary_symmetric(self):
        """Test elementary symmetric sums."""
        assert elementary_symmetric([1.0, 2.0, 3.0], 2) == pytest.approx(11.0)
        assert elementary_symmetric([1.0, 2.0], 3) == 0.0


class TestCospectrality:
    """Unit tests for cospectrality decisions and distance parameters."""

    def test_bk_pair(self, b1_pair):
        """Test the cospectral pair built on B_1."""
        g1, g2 = b1_pair

        assert dl_char_poly(g1) == B1_POLYNOMIAL
        assert dl_char_poly(g2) == B1_POLYNOMIAL
        assert are_dl_cospectral(g1, g2)

    def test_isomorphic_graphs(self):
        """Test that isomorphic graphs are only cospectral in the relaxed sense."""
        g = ConnectedGraphFactory(order=7)
        h = relabeled(g)

        assert not are_dl_cospectral(g, h)
        assert are_dl_cospectral(g, h, relaxed=True)

    def test_different_orders(self):
        """Test that graphs of different orders are never cospectral."""
        assert not are_dl_cospectral(path_graph(3), path_graph(4), relaxed=True)

    def test_strongly_regular_pair(self, srg_pair):
        """Test that cospectral transmission regular graphs are also distance cospectral."""
        shrikhande, rook = srg_pair

        assert are_dl_cospectral(shrikhande, rook)
        assert are_d_cospectral(shrikhande, rook)

    def test_distance_parameters(self):
        """Test Wiener index, average transmission and transmission regularity."""
        assert wiener_index(path_graph(4)) == 10
        assert average_transmission(path_graph(3)) == Fraction(8, 3)
        assert is_transmission_regular(cycle_graph(5))
        assert not is_transmission_regular(path_graph(3))

    def test_second_eigenvalue_bound(self):
        """Test that the second smallest eigenvalue is at least the order."""
        for _ in range(10):
            assert dl_second_eigenvalue_bound(ConnectedGraphFactory())


class TestCoefficients:
    """Unit tests for coefficient sequence analysis."""

    def test_complete_graph_report(self):
        """Test the coefficient report of K4."""
        report = coefficient_report(CharPoly.parse(K4_POLYNOMIAL))

        assert report.alternating_signs
        assert report.log_concave
        assert report.unimodal_abs
        assert report.decreasing_abs
        assert report.peak_index == 1

    def test_random_graphs(self):
        """Test sign alternation, log-concavity and decreasing magnitudes on random graphs."""
        for _ in range(15):
            report = coefficient_report(dl_char_poly(ConnectedGraphFactory()))
            assert report.alternating_signs and report.log_concave and report.decreasing_abs

    def test_non_alternating(self):
        """Test a polynomial whose signs do not alternate."""
        assert not coefficient_report(CharPoly((0, 2, 3, 1))).alternating_signs

    def test_helpers(self):
        """Test unimodality and peak detection."""
        assert is_unimodal([1, 3, 3, 2, 1])
        assert not is_unimodal([1, 3, 1, 3])
        assert peak_index([1, 5, 5], start=1) == 2

    def test_csv(self):
        """Test the coefficient CSV."""
        assert coefficients_csv(CharPoly((0, 9, -6, 1))) == (
            "k,coefficient,abs\n0,0,0\n1,9,9\n2,-6,6\n3,1,1\n"
        )

    def test_normalized_tree_coefficients(self):
        """Test the normalized distance coefficients of small trees."""
        assert normalized_tree_coefficients(path_graph(3)) == (2, 6)
        assert normalized_tree_coefficients(path_graph(2)) == (1,)

    def test_normalized_constant_term(self):
        """Test that the normalized constant coefficient of a tree is n - 1."""
        for _ in range(10):
            tree = ConnectedGraphFactory(density=0.0)
            assert normalized_tree_coefficients(tree)[0] == tree.order - 1

    def test_not_a_tree(self):
        """Test that graphs with a cycle are refused."""
        with pytest.raises(NotATreeError):
            normalized_tree_coefficients(cycle_graph(4))


class TestTwins:
    """Unit tests for the twin eigenstructure checks."""

    def test_planted_twins(self):
        """Test the three checks on graphs with a planted twin."""
        for _ in range(10):
            host, u, v = planted_twins()
            assert are_independent_twins(host, u, v)
            record = verify_twin_eigenstructure(host, u, v)
            assert record.passed
            assert record.polynomial == dl_char_poly(host)

    def test_star_leaves(self):
        """Test twins of transmission 5 in the star with three leaves."""
        record = verify_twin_eigenstructure(star_graph(3), 1, 2)

        assert record.transmission == 5
        assert record.polynomial.root_multiplicity(7) >= 1

    def test_not_twins(self):
        """Test that non-twins raise HypothesisError."""
        with pytest.raises(HypothesisError):
            verify_twin_eigenstructure(path_graph(4), 0, 3)

    def test_adjacent_vertices_are_not_independent_twins(self):
        """Test that adjacent vertices are never independent twins."""
        assert not are_independent_twins(Graph(2, [(0, 1)]), 0, 1)
