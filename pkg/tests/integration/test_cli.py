"""
Integration tests for the griesmer-lab command line.

These tests drive every subcommand through ``run`` and check printed output,
written files and exit codes, exercising the path from argument parsing
through the library to the rendered result.
"""

import json

import pytest

from src.buildkit import parse_hadamard, simplex
from src.codekit import min_distance, read_code
from src.optsearch import SearchResult


@pytest.mark.integration
class TestBoundsCommand:
    """Test class for the bounds subcommand."""

    def test_counterexample_parameters(self, cli):
        """
        Test the table for (q, k, d) = (2, 4, 18).

        This test verifies:
        - Griesmer appears with value 35 and class linear
        - The best systematic bound is below 35 and the gap is noted
        """
        code, out = cli("bounds", "--q", 2, "--k", 4, "--d", 18)
        assert code == 0
        assert "griesmer" in out
        assert "best: any=34 systematic=34 linear=35" in out
        assert "note: Griesmer 35 holds for linear codes" in out

    def test_size_query(self, cli):
        code, out = cli("bounds", "--q", 2, "--M", 8, "--d", 5, "--json")
        assert code == 0
        assert json.loads(out)["best"]["any"] == 10

    def test_single_message_symbol(self, cli):
        code, out = cli("bounds", "--q", 2, "--k", 1, "--d", 7, "--json")
        payload = json.loads(out)
        assert {e["value"] for e in payload["entries"]} == {7}
        assert all("class" in e for e in payload["entries"])

    def test_invalid_flags(self, cli):
        with pytest.raises(SystemExit) as excinfo:
            cli("bounds", "--q", 2, "--k", 4, "--M", 16, "--d", 18)
        assert excinfo.value.code == 2
        code, _ = cli("bounds", "--q", 6, "--k", 2, "--d", 3)
        assert code == 2


@pytest.mark.integration
class TestConstructCommand:
    """Test class for the construct subcommand."""

    def test_counterexample(self, cli, tmp_path):
        """
        Test writing C_4 to a codefile.

        This test verifies:
        - The file has length 34 and 16 words
        - The printed summary reports the parameters
        """
        out_path = tmp_path / "c4.code"
        code, out = cli("construct", "counterexample", "--k", 4, "--out", out_path)
        assert code == 0
        assert "(34,16,18)_2" in out
        written = read_code(out_path)
        assert (written.n, written.size) == (34, 16)
        assert "n 34" in out_path.read_text().splitlines()

    def test_punctured_counterexample(self, cli, tmp_path):
        code, out = cli("construct", "counterexample", "--k", 4, "--punctured", "--out", tmp_path / "p.code")
        assert code == 0
        assert "(33,16,17)_2" in out

    def test_dim3(self, cli, tmp_path):
        code, out = cli("construct", "dim3", "--d", 7, "--out", tmp_path / "x.code")
        assert code == 0
        assert out.startswith("(13,8,7)_2 linear")

    def test_simplex_sequence(self, cli, tmp_path):
        code, out = cli("construct", "simplex-seq", "--k", 3, "--h", 2, "--out", tmp_path / "s.code")
        assert code == 0
        assert "(14,8,8)_2" in out

    def test_levenshtein(self, cli, tmp_path):
        code, out = cli("construct", "levenshtein", "--order", 12, "--size", 8, "--out", tmp_path / "l.code")
        assert code == 0
        assert "(11,8,6)_2" in out

    def test_hadamard(self, cli, tmp_path):
        out_path = tmp_path / "h36.had"
        code, out = cli("construct", "hadamard", "--order", 36, "--out", out_path)
        assert code == 0
        assert "paley2" in out
        assert parse_hadamard(out_path.read_text()).order == 36

    def test_unknown_order(self, cli, tmp_path):
        code, _ = cli("construct", "hadamard", "--order", 92, "--out", tmp_path / "h.had")
        assert code == 3
        assert not (tmp_path / "h.had").exists()


@pytest.mark.integration
class TestAnalyzeCommand:
    """Test class for the analyze subcommand."""

    def test_counterexample_violates_griesmer(self, cli, codefile, c4):
        code, out = cli("analyze", codefile(c4, "c4.code"))
        assert code == 0
        first = out.splitlines()[0]
        assert first.startswith("(34,16,18)_2 nonlinear systematic equidistant")
        assert "Griesmer(linear)=35: VIOLATED by 1" in first

    def test_simplex_meets_griesmer(self, cli, codefile):
        code, out = cli("analyze", codefile(simplex(3).span(), "s3.code"))
        assert code == 0
        assert out.splitlines()[0] == "(7,8,4)_2 linear systematic equidistant; meets Griesmer"

    def test_json(self, cli, codefile, c4):
        code, out = cli("analyze", codefile(c4), "--json")
        payload = json.loads(out)
        assert payload["analysis"]["params"]["n"] == 34
        griesmer = next(c for c in payload["comparisons"] if c["bound"] == "griesmer")
        assert griesmer["margin"] == -1
        assert griesmer["class"] == "linear"

    def test_parse_error(self, cli, tmp_path):
        path = tmp_path / "broken.code"
        path.write_text("codefile v1\nq 2\nn 3\n0101\n")
        code, _ = cli("analyze", path)
        assert code == 4

    def test_missing_file(self, cli, tmp_path):
        code, _ = cli("analyze", tmp_path / "absent.code")
        assert code == 4


@pytest.mark.integration
class TestSearchCommand:
    """Test class for the search subcommand."""

    def test_min_length(self, cli, tmp_path):
        out_path = tmp_path / "w.code"
        code, out = cli("search", "--q", 2, "--M", 8, "--d", 3, "--n-limit", 8, "--out", out_path)
        assert code == 0
        assert "status: found" in out
        assert "value: 6" in out
        assert read_code(out_path).n == 6

    def test_fixed_length_json(self, cli):
        code, out = cli("search", "--q", 2, "--M", 8, "--d", 5, "--length", 9, "--json")
        assert code == 0
        result = SearchResult.model_validate_json(out)
        assert result.status == "exhausted"
        assert result.value == 6
        assert min_distance(result.witness) >= 5

    def test_systematic(self, cli):
        code, out = cli("search", "--q", 2, "--k", 3, "--d", 4, "--systematic", "--n-limit", 8)
        assert code == 0
        assert "value: 7" in out

    def test_systematic_with_hint(self, cli, codefile, c4):
        code, out = cli("search", "--q", 2, "--k", 4, "--d", 18, "--systematic", "--hint", codefile(c4), "--json")
        assert code == 0
        result = SearchResult.model_validate_json(out)
        assert (result.value, result.lower_bound) == (34, 34)

    def test_budget_exceeded(self, cli):
        code, out = cli("search", "--q", 2, "--M", 8, "--d", 4, "--length", 7, "--budget-nodes", 2)
        assert code == 5
        assert "status: budget_exceeded" in out

    def test_missing_flags(self, cli):
        assert cli("search", "--q", 2, "--M", 8, "--d", 3)[0] == 2
        assert cli("search", "--q", 2, "--M", 8, "--d", 3, "--systematic", "--n-limit", 8)[0] == 2
        assert cli("search", "--q", 2, "--M", 8, "--d", 3, "--n-limit", 30)[0] == 2


@pytest.mark.integration
class TestVerifyCommand:
    """Test class for the verify subcommand."""

    def test_counterexample(self, cli):
        code, out = cli("verify", "counterexample", "--k", 4)
        assert code == 0
        assert "pass" in out
        assert "34 < 35" in out

    def test_lemmas(self, cli):
        code, out = cli("verify", "lemmas", "--rmax", 6, "--kmax", 6, "--dmax", 64, "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert {"plotkin-griesmer", "bound-b", "n2-8"} <= set(payload["details"])

    def test_n4(self, cli):
        code, out = cli("verify", "n4", "--dmax", 4)
        assert code == 0
        assert out.startswith("n4: pass")

    def test_optimal4(self, cli):
        code, out = cli("verify", "optimal4", "--dmax", 3)
        assert code == 0
        assert "all optimal size-4 codes linear" in out

    def test_griesmer_family(self, cli):
        code, out = cli("verify", "griesmer-family", "--q", 2, "--d", 3, "--json")
        assert code == 0
        assert {e["status"] for e in json.loads(out)["entries"]} == {"confirmed"}

    def test_budget_exceeded(self, cli):
        code, _ = cli("verify", "n8", "--dmax", 4, "--budget-nodes", 1)
        assert code == 5

    def test_out_of_range(self, cli):
        assert cli("verify", "n8", "--dmax", 7)[0] == 2


@pytest.mark.integration
class TestReportCommand:
    """Test class for the report subcommand."""

    def test_table1(self, cli):
        code, out = cli("report", "table1")
        assert code == 0
        assert "(26,12)" in out
        assert "bound_b (published value)" in out
        assert "FAILED" not in out

    def test_table1_json(self, cli):
        code, out = cli("report", "table1", "--json")
        payload = json.loads(out)
        bound_b = next(r for r in payload["rows"] if r["row"] == "bound_b")
        assert [bound_b[c] for c in payload["columns"]] == [7, 9, 5, 7, 6, 7]
        assert payload["failures"] == []


@pytest.mark.integration
class TestGlobalOptions:
    """Test class for --config and --verbose."""

    def test_custom_config(self, cli, tmp_path):
        path = tmp_path / "lab.yaml"
        path.write_text("search:\n  max_nodes: 2\n")
        code, _ = cli("--config", path, "search", "--q", 2, "--M", 8, "--d", 4, "--length", 7)
        assert code == 5

    def test_missing_config(self, cli, tmp_path):
        code, _ = cli("--config", tmp_path / "absent.yaml", "bounds", "--q", 2, "--k", 2, "--d", 3)
        assert code == 2

    def test_bad_thread_variable(self, cli, monkeypatch):
        monkeypatch.setenv("GRIESMER_LAB_THREADS", "zero")
        assert cli("search", "--q", 2, "--M", 4, "--d", 3, "--n-limit", 6)[0] == 2
