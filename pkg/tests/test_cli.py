"""Unit tests for the dl-cospectral command line."""

import io
import json
import logging
from unittest.mock import patch

import pytest

from dl_cospectral.census.storage import load_classes
from dl_cospectral.cli.handlers.base import EXIT_FAILED, EXIT_INPUT_ERROR, EXIT_OK, BaseCommandHandler
from dl_cospectral.cli.main import main
from dl_cospectral.constructions.families import bk_graph
from dl_cospectral.core.config import settings
from dl_cospectral.spectra.coefficients import coefficients_csv
from dl_cospectral.spectra.cospectral import dl_char_poly
from dl_cospectral.graphs.formats import parse_graph6


def run(*argv):
    stdout = io.StringIO()
    code = main(list(argv), stdout=stdout)
    return code, stdout.getvalue()


class TestSpectrumCommand:
    """Unit tests for the spectrum subcommand."""

    def test_text_output(self):
        """Test the polynomial of K4 in the text report."""
        code, out = run("spectrum", "--g6", "C~")

        assert code == EXIT_OK
        assert "x^4 - 12x^3 + 48x^2 - 64x" in out

    def test_text_spectrum_ascending(self):
        """Test that the text spectrum lists eigenvalues in ascending order, like the JSON."""
        code, out = run("spectrum", "--g6", "Bg")

        lines = out.splitlines()
        values = [float(line.split()[0]) for line in lines[lines.index("  spectrum:") + 1:]]
        assert code == EXIT_OK
        assert values == sorted(values)
        assert values[1:] == pytest.approx([3.0, 5.0])

    def test_json_output(self):
        """Test the JSON record of an edge-list input."""
        code, out = run("--json", "spectrum", "--edges", "3; 0 1; 1 2")

        (record,) = json.loads(out)
        assert code == EXIT_OK
        assert record["order"] == 3
        assert record["poly"] == ["0", "15", "-8", "1"]
        assert record["poly_text"] == "x^3 - 8x^2 + 15x"

    def test_csv_output(self):
        """Test the coefficient CSV."""
        code, out = run("spectrum", "--g6", "Bw", "--csv")

        assert code == EXIT_OK
        assert out.rstrip("\n") == coefficients_csv(dl_char_poly(parse_graph6("Bw"))).rstrip("\n")

    def test_family_source(self):
        """Test that a family given as NAME:ARG is expanded."""
        code, out = run("--json", "spectrum", "--family", "cycle:5")

        assert code == EXIT_OK
        assert json.loads(out)[0]["order"] == 5

    def test_file_source(self, tmp_path):
        """Test that a graph6 file is read line by line."""
        path = tmp_path / "graphs.g6"
        path.write_text("C~\n\nBg\n")

        code, out = run("--json", "spectrum", "--file", str(path))

        assert code == EXIT_OK
        assert [record["source"] for record in json.loads(out)] == [f"{path}:1", f"{path}:3"]

    def test_no_source(self):
        """Test that a missing graph source is an input error."""
        code, _ = run("spectrum")

        assert code == EXIT_INPUT_ERROR


class TestVerifyCommand:
    """Unit tests for the verify subcommand."""

    def test_cospectral_pair(self, b1_pair):
        """Test the verdict and differences for the B_1 pair."""
        g, h = b1_pair

        code, out = run("--json", "verify", "--g6", g.to_graph6(), "--g6", h.to_graph6())

        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["verdict"] == "cospectral, non-isomorphic"
        assert payload["dl_polynomials_equal"] is True
        assert payload["differences"]["is_planar"] == [True, False]

    def test_isomorphic_pair(self):
        """Test two labelings of the path on three vertices."""
        code, out = run("verify", "--g6", "Bg", "--edges", "3; 0 2; 2 1")

        assert code == EXIT_OK
        assert "isomorphic" in out

    def test_not_cospectral(self):
        """Test that different spectra exit with EXIT_FAILED."""
        code, out = run("--json", "verify", "--g6", "Bg", "--g6", "Bw", "--no-profile")

        assert code == EXIT_FAILED
        assert json.loads(out)["verdict"] == "not cospectral"

    @pytest.mark.parametrize(
        "argv",
        [
            ("verify", "--g6", "Bg"),
            ("verify", "--g6", "Bg", "--g6", "C"),
            ("verify", "--g6", "C?", "--g6", "C~"),
        ],
    )
    def test_input_errors(self, argv):
        """Test that malformed, disconnected or missing inputs exit with EXIT_INPUT_ERROR."""
        code, _ = run(*argv)

        assert code == EXIT_INPUT_ERROR


class TestConstructCommand:
    """Unit tests for the construct subcommand."""

    def test_bk_pair(self):
        """Test the provenance record of the B_3 pair."""
        code, out = run("--json", "construct", "bk-pair", "--k", "3")

        provenance = json.loads(out)
        assert code == EXIT_OK
        assert provenance["orders"] == [12, 12]
        assert provenance["parameters"] == {"k": 3}
        assert len(provenance["graphs"]) == 2

    def test_text_output_lists_graphs(self):
        """Test that the text output starts with the graph6 lines."""
        code, out = run("construct", "hn", "--n", "7")

        assert code == EXIT_OK
        assert parse_graph6(out.splitlines()[0]).order == 21

    def test_switch(self):
        """Test the cross switch of the B_1 host."""
        code, out = run("--json", "construct", "switch", "--g6", bk_graph(1).to_graph6(), "--mode", "cross")

        provenance = json.loads(out)
        assert code == EXIT_OK
        assert [1, 2] in [p for pair in provenance["parameters"]["pairs"] for p in pair["cousins"]]
        assert all(order == 8 for order in provenance["orders"])

    def test_co_transmission_host(self):
        """Test the co-transmission twin host and its pair."""
        code, out = run("--json", "construct", "co-transmission-host")

        provenance = json.loads(out)
        assert code == EXIT_OK
        assert provenance["orders"] == [8, 8, 8]

    def test_missing_parameter(self):
        """Test that a missing family parameter is an input error."""
        code, _ = run("construct", "circulant", "--n", "8")

        assert code == EXIT_INPUT_ERROR


class TestCensusCommand:
    """Unit tests for the census subcommand."""

    def test_enumerate(self, tmp_path):
        """Test a census over the built-in enumeration with a class file."""
        out_path = tmp_path / "classes.jsonl"

        code, out = run("--json", "census", "--enumerate", "5", "--out", str(out_path))

        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["graphs"] == 21
        assert len(load_classes(out_path)) == len(payload["classes"])

    def test_corpus(self, tmp_path, b1_pair):
        """Test a census over a graph6 corpus with a markdown report."""
        corpus = tmp_path / "pair.g6"
        corpus.write_text("".join(g.to_graph6() + "\n" for g in b1_pair))
        report = tmp_path / "report.md"

        code, out = run("census", "--corpus", str(corpus), "--report", str(report))

        assert code == EXIT_OK
        assert "1 cospectral classes among 2 graphs" in out
        assert "| is_planar | witness-of-difference |" in report.read_text()

    def test_needs_a_source(self):
        """Test that a census without a graph source is an input error."""
        code, _ = run("census")

        assert code == EXIT_INPUT_ERROR

    def test_setting_flags(self, tmp_path):
        """Test that limit flags reach the settings."""
        run("--planarity-limit", "9", "census", "--enumerate", "3", "--shards", "1", "--tmpdir", str(tmp_path))

        assert settings.DL_PLANARITY_LIMIT == 9
        assert settings.DL_CENSUS_TMPDIR == str(tmp_path)


class TestCheckCommand:
    """Unit tests for the check subcommand."""

    def test_passing_check(self):
        """Test that a passing suite exits with EXIT_OK."""
        code, out = run("--json", "check", "four-vertex-switch")

        assert code == EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_failing_check(self):
        """Test that a failing suite exits with EXIT_FAILED."""
        from dl_cospectral.checks import CheckResult

        failed = CheckResult("coefficients", "demo", cases=1, failure_count=1, failures=["bad"])
        with patch("dl_cospectral.cli.handlers.check.run_check", return_value=failed):
            code, out = run("check", "coefficients")

        assert code == EXIT_FAILED
        assert "bad" in out

    @pytest.mark.parametrize(
        "argv, check_id",
        [
            (("lemma-3.8",), "four-vertex-switch"),
            (("prop-4.2", "--max-n", "9"), "hn-transmission"),
            (("prop-4.9", "--max-n", "20"), "consecutive-circulant"),
            (("thm-5.3", "--enumerate", "5"), "coefficients"),
            (("remark-4.4",), "srg-spectrum"),
        ],
    )
    def test_numbered_aliases(self, argv, check_id):
        """Test that each numbered id runs its descriptive suite and passes."""
        code, out = run("--json", "check", *argv)

        result = json.loads(out)
        assert code == EXIT_OK
        assert result["check_id"] == check_id
        assert result["passed"] is True

    @pytest.mark.slow
    def test_consecutive_circulants_to_sixty(self):
        """Test the consecutive circulant closed forms up to order 60."""
        code, _ = run("check", "prop-4.9", "--max-n", "60")

        assert code == EXIT_OK

    @pytest.mark.slow
    def test_coefficients_to_order_eight(self):
        """Test the coefficient suite over every connected graph up to order 8."""
        code, out = run("--json", "check", "thm-5.3", "--enumerate", "8")

        result = json.loads(out)
        assert code == EXIT_OK
        assert result["cases"] == 1 + 2 + 6 + 21 + 112 + 853 + 11117

    def test_unknown_check(self):
        """Test that argparse rejects an unknown check id."""
        with pytest.raises(SystemExit):
            run("check", "no-such-check")


class TestBaseCommandHandler:
    """Unit tests for the BaseCommandHandler class."""

    def test_handle_error_logs_with_traceback(self):
        """Test that errors are logged with exc_info and mapped to EXIT_INPUT_ERROR."""
        # Arrange
        handler = BaseCommandHandler(config=None, args=None, stdout=io.StringIO())

        # Act
        with patch("dl_cospectral.cli.handlers.base.logger") as mock_logger:
            code = handler._handle_error(ValueError("boom"), "verify")

        # Assert
        assert code == EXIT_INPUT_ERROR
        mock_logger.error.assert_called_once()
        args, kwargs = mock_logger.error.call_args
        assert "Error during verify" in args[0]
        assert kwargs["exc_info"] is True

    def test_errors_are_logged(self, caplog):
        """Test that a failing command logs its error."""
        with caplog.at_level(logging.ERROR):
            code, _ = run("verify", "--g6", "Bg")

        assert code == EXIT_INPUT_ERROR
        assert "Error during verify" in caplog.text

    def test_invalid_limit_flag(self):
        """Test that argparse rejects a non-positive limit."""
        with pytest.raises(SystemExit):
            run("--order-cap", "0", "spectrum", "--g6", "Bg")
