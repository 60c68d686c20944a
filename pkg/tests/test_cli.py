"""Tests for the rigikit command line."""

import json

import pytest

from rigikit.commands import ExitCode
from rigikit.main import main
from rigikit.services.graph6_service import parse_graph6


@pytest.fixture
def graph_file(tmp_path):
    def write(*lines):
        path = tmp_path / "graphs.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        return str(path)

    return write


class TestAnalyzeCommand:
    """Test `rigikit analyze`."""

    def test_k4(self, graph_file, capsys):
        """Test the JSON report of K4."""
        assert main(["analyze", graph_file("C~")]) == ExitCode.OK
        report = json.loads(capsys.readouterr().out)
        assert report["rigidity"]["rigid"] is True
        assert report["rigidity"]["globally_rigid"] is True
        assert report["index"] == 1

    def test_csv(self, graph_file, capsys):
        """Test the CSV output with a header row."""
        path = graph_file("C~", "", "Bw")
        assert main(["analyze", "--format", "csv", "--no-bounds", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("index,graph6,n,m")
        assert len(lines) == 3
        assert lines[2].startswith("3,Bw,3,3")

    def test_parse_error(self, graph_file, capsys):
        """Test that a malformed line fails the whole run."""
        assert main(["analyze", graph_file("C~", "C{!")]) == ExitCode.PARSE_ERROR
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "line 2" in captured.err

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable input file."""
        assert main(["analyze", str(tmp_path / "missing.g6")]) == ExitCode.ERROR
        assert "rigikit:" in capsys.readouterr().err

    def test_bad_dimensions(self, graph_file):
        """Test the dimension list validation."""
        with pytest.raises(SystemExit):
            main(["analyze", "--dims", "2,x", graph_file("C~")])

    @pytest.mark.slow
    def test_special30(self, graph_file, capsys):
        """Test the 5-regular vertex-transitive figure graph."""
        assert main(["catalog", "emit", "fig1_special30"]) == 0
        word = capsys.readouterr().out.strip()
        assert main(["analyze", "--no-bounds", graph_file(word)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["rigidity"]["rigid"] is True
        assert report["rigidity"]["globally_rigid"] is False

    def test_bridged_cubic(self, graph_file, capsys):
        """Test the cubic Ramanujan graph with a bridge."""
        assert main(["catalog", "emit", "fig3_cubic_bridge10"]) == 0
        word = capsys.readouterr().out.strip()
        assert main(["analyze", "--dims", "2", graph_file(word)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["spectral"]["is_ramanujan"] is True
        assert report["connectivity"]["edge_connectivity"] == 1
        assert report["body"][0]["body_hinge_rigid"] is False
        assert report["violations"] == []


class TestCensusCommand:
    """Test `rigikit census`."""

    def test_expectation_met(self, capsys):
        """Test a golden count that holds."""
        assert main(["census", "--n", "8", "--k", "5", "--expect-ramanujan", "3"]) == 0
        header, row = capsys.readouterr().out.splitlines()
        assert header.startswith("n,k,connected")
        assert row.startswith("8,5,true,false,false,3,3")

    def test_expectation_failed(self, capsys):
        """Test a golden count that does not hold."""
        argv = ["census", "--n", "8", "--k", "5", "--expect-ramanujan", "4"]
        assert main(argv) == ExitCode.EXPECTATION_FAILED
        assert "expected 4, got 3" in capsys.readouterr().err

    def test_guard(self, capsys):
        """Test the enumeration guard exit code."""
        assert main(["census", "--n", "16", "--k", "3"]) == ExitCode.GUARD_REFUSED
        assert "guard" in capsys.readouterr().err

    def test_impossible_request(self, capsys):
        """Test an odd n*k."""
        assert main(["census", "--n", "7", "--k", "3"]) == ExitCode.ERROR

    def test_json_and_dump(self, tmp_path, capsys):
        """Test JSON output and the graph6 dump file."""
        dump = tmp_path / "ramanujan.g6"
        argv = ["census", "--n", "8", "--k", "4", "--bipartite", "--format", "json"]
        assert main(argv + ["--dump", str(dump)]) == 0
        row = json.loads(capsys.readouterr().out)
        assert row["counts"]["ramanujan"] == 1
        assert "ramanujan_graph6" not in row
        (word,) = dump.read_text(encoding="ascii").split()
        assert parse_graph6(word).m == 16

    @pytest.mark.slow
    def test_bipartite_golden(self):
        """Test bipartite 4-regular Ramanujan graphs on 12 vertices."""
        argv = ["census", "--n", "12", "--k", "4", "--bipartite"]
        assert main(argv + ["--expect-ramanujan", "4"]) == 0

    @pytest.mark.slow
    def test_rigid_not_globally_rigid_golden(self):
        """Test 4-regular Ramanujan graphs on 11 vertices."""
        argv = ["census", "--n", "11", "--k", "4", "--expect-rigid-not-gr", "3"]
        assert main(argv) == 0


class TestCatalogCommand:
    """Test `rigikit catalog`."""

    def test_list(self, capsys):
        """Test the text listing."""
        assert main(["catalog", "list"]) == 0
        lines = capsys.readouterr().out.splitlines()
        entries = [line for line in lines if not line.startswith(" ")]
        assert len(entries) >= 18
        assert entries[0].startswith("fig1_special30\t1\tn=30")

    def test_list_json(self, capsys):
        """Test the JSON listing."""
        assert main(["catalog", "list", "--format", "json"]) == 0
        lines = capsys.readouterr().out.splitlines()
        names = [json.loads(line)["name"] for line in lines]
        assert "fig2_ring3K4" in names

    def test_emit(self, capsys):
        """Test emitting one figure graph."""
        assert main(["catalog", "emit", "fig2_ring3K4"]) == 0
        assert parse_graph6(capsys.readouterr().out).n == 12

    def test_emit_unknown(self, capsys):
        """Test an unknown catalog name."""
        assert main(["catalog", "emit", "nope"]) == ExitCode.ERROR
        assert "nope" in capsys.readouterr().err

    @pytest.mark.slow
    def test_verify(self, capsys):
        """Test that every asserted fact holds."""
        assert main(["catalog", "verify"]) == 0
        assert capsys.readouterr().out.splitlines()[-1].endswith("facts hold")


class TestMiscellaneous:
    """Test the schema command and global options."""

    def test_schema(self, capsys):
        """Test the printed JSON schema."""
        assert main(["schema"]) == 0
        schema = json.loads(capsys.readouterr().out)
        assert schema["$id"].startswith("rigikit/property-report/")

    def test_version(self, capsys):
        """Test --version."""
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert "rigikit" in capsys.readouterr().out

    def test_command_required(self):
        """Test that a subcommand is required."""
        with pytest.raises(SystemExit):
            main([])
