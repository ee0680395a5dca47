"""Unit tests for the named verification suites."""

import pytest

from dl_cospectral.checks import (
    CHECK_ALIASES,
    CHECKS,
    MAX_REPORTED_FAILURES,
    CheckOptions,
    CheckResult,
    run_check,
)
from dl_cospectral.core.exceptions import ParameterError


class TestCheckResult:
    """Unit tests for the CheckResult class."""

    def test_record(self):
        """Test that failures are counted exactly but listed up to the cap."""
        result = CheckResult("demo", "demo check")

        for index in range(MAX_REPORTED_FAILURES + 5):
            result.record(index % 2 == 0, f"case {index}")

        assert result.cases == MAX_REPORTED_FAILURES + 5
        assert result.failure_count == (MAX_REPORTED_FAILURES + 5) // 2
        assert len(result.failures) == min(MAX_REPORTED_FAILURES, result.failure_count)
        assert not result.passed
        assert result.to_json()["passed"] is False

    def test_empty_result_passes(self):
        """Test that a result without failures passes."""
        assert CheckResult("demo", "demo check").passed


class TestChecks:
    """Unit tests for each registered suite, run with small options."""

    def test_registry(self):
        """Test the registered check ids."""
        assert set(CHECKS) == {
            "four-vertex-switch",
            "hn-transmission",
            "consecutive-circulant",
            "coefficients",
            "srg-spectrum",
            "collins-peak",
            "twin-eigenstructure",
        }

    def test_four_vertex_switch(self):
        """Test that every isomorphic four-vertex configuration is explained."""
        result = run_check("four-vertex-switch")

        assert result.passed
        assert result.details["configurations"] == 16
        assert result.cases == result.details["isomorphic"] > 0

    def test_hn_transmission(self):
        """Test the transmission of H_n up to n = 9."""
        result = run_check("hn-transmission", CheckOptions(max_n=9))

        assert result.passed
        assert result.details["even_transmissions"][2] == [6, 7]
        assert result.details["even_transmissions"][4] == [24, 25]

    def test_consecutive_circulant(self):
        """Test the closed forms for consecutive circulants up to order 20."""
        result = run_check("consecutive-circulant", CheckOptions(max_n=20))

        assert result.passed
        assert result.cases == sum(n // 2 for n in range(3, 21))

    def test_coefficients(self):
        """Test the coefficient properties on all connected graphs up to order 5."""
        result = run_check("coefficients", CheckOptions(enumerate_n=5))

        assert result.passed
        assert result.cases == 1 + 2 + 6 + 21

    def test_coefficients_from_corpus(self, tmp_path):
        """Test that the coefficient suite reads a graph6 corpus."""
        path = tmp_path / "tiny.g6"
        path.write_text("C~\nBg\nBw\n")

        result = run_check("coefficients", CheckOptions(corpus=str(path)))

        assert result.passed
        assert result.cases == 3

    def test_srg_spectrum(self):
        """Test the strongly regular samples."""
        result = run_check("srg-spectrum")

        assert result.passed
        assert result.details["shrikhande"] == [16, 6, 2, 2]
        assert result.details["paley:29"] == [29, 14, 6, 7]

    def test_collins_peak(self):
        """Test the peak location for odd paths of order 9 to 17."""
        result = run_check("collins-peak", CheckOptions(max_n=17))

        assert result.passed
        assert sorted(result.details["peaks"]) == [9, 11, 13, 15, 17]

    def test_twin_eigenstructure(self):
        """Test the twin eigenvectors on random hosts."""
        result = run_check("twin-eigenstructure", CheckOptions(count=25, seed=7, max_n=9))

        assert result.passed
        assert result.cases == 25
        assert result.details == {"seed": 7}

    def test_twin_eigenstructure_needs_room(self):
        """Test that max_n below four is refused."""
        with pytest.raises(ParameterError):
            run_check("twin-eigenstructure", CheckOptions(max_n=3))

    def test_aliases_point_to_registered_suites(self):
        """Test that every numbered alias names a registered suite."""
        assert set(CHECK_ALIASES.values()) <= set(CHECKS)
        assert not set(CHECK_ALIASES) & set(CHECKS)

    def test_alias_runs_suite(self):
        """Test that run_check resolves an alias to its suite."""
        result = run_check("lemma-3.8")

        assert result.check_id == "four-vertex-switch"
        assert result.passed

    @pytest.mark.slow
    def test_coefficients_order_eight(self):
        """Test the coefficient properties on all 11117 connected graphs of order 8."""
        result = run_check("coefficients", CheckOptions(enumerate_n=8))

        assert result.passed
        assert result.cases == 1 + 2 + 6 + 21 + 112 + 853 + 11117

    def test_unknown_check(self):
        """Test that an unknown check id raises ParameterError."""
        with pytest.raises(ParameterError, match="Unknown check"):
            run_check("no-such-check")
