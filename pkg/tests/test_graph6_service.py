"""Tests for graph6 encoding and decoding."""

import io

import networkx as nx
import pytest

from rigikit.errors import Graph6ParseError
from rigikit.models.graph_models import SimpleGraph
from rigikit.services.graph6_service import (
    emit_graph6,
    parse_graph6,
    read_graph6_lines,
    write_graph6_lines,
)
from rigikit.services.graph_service import complete_graph, cycle_graph, empty_graph


class TestParseGraph6:
    """Test decoding of graph6 words."""

    def test_complete_graph(self):
        """Test that C~ decodes to K4."""
        graph = parse_graph6("C~")
        assert graph.n == 4
        assert graph.m == 6
        assert graph.is_complete()

    def test_small_words(self):
        """Test the words for 0, 1 and 2 vertices."""
        assert parse_graph6("?") == SimpleGraph(0)
        assert parse_graph6("@") == SimpleGraph(1)
        assert parse_graph6("A_") == SimpleGraph(2, ((0, 1),))
        assert parse_graph6("A?") == SimpleGraph(2)

    def test_header_and_whitespace(self):
        """Test that the optional header and trailing newline are accepted."""
        assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)

    def test_matches_networkx(self):
        """Test decoding against networkx on a few graphs."""
        for graph in (nx.petersen_graph(), nx.cycle_graph(9), nx.star_graph(7)):
            word = nx.to_graph6_bytes(graph, header=False).decode().strip()
            decoded = parse_graph6(word)
            assert decoded.n == graph.number_of_nodes()
            assert set(decoded.edges) == {
                (min(u, v), max(u, v)) for u, v in graph.edges()
            }

    def test_long_size_field(self):
        """Test a graph with more than 62 vertices (four byte size field)."""
        graph = cycle_graph(70)
        word = emit_graph6(graph)
        assert word.startswith("~")
        assert parse_graph6(word) == graph

    def test_byte_out_of_range(self):
        """Test that bytes outside 63..126 are rejected with their offset."""
        with pytest.raises(Graph6ParseError) as exc_info:
            parse_graph6("C~ ~")
        assert exc_info.value.offset == 2

    def test_wrong_length(self):
        """Test that a body of the wrong length is rejected."""
        with pytest.raises(Graph6ParseError):
            parse_graph6("C~~")
        with pytest.raises(Graph6ParseError):
            parse_graph6("D~")

    def test_nonzero_padding(self):
        """Test that padding bits must be zero."""
        with pytest.raises(Graph6ParseError):
            parse_graph6("A`")

    def test_empty_word(self):
        """Test that an empty line is not a graph."""
        with pytest.raises(Graph6ParseError):
            parse_graph6("   ")

    def test_line_number_in_message(self):
        """Test that the line number is reported."""
        with pytest.raises(Graph6ParseError, match="line 7"):
            parse_graph6("C", line=7)


class TestEmitGraph6:
    """Test encoding of graphs."""

    def test_known_words(self):
        """Test encodings of small graphs."""
        assert emit_graph6(complete_graph(4)) == "C~"
        assert emit_graph6(empty_graph(0)) == "?"
        assert emit_graph6(SimpleGraph(2, ((0, 1),))) == "A_"

    def test_matches_networkx(self):
        """Test that encoding agrees with networkx for the same labeling."""
        for graph in (nx.petersen_graph(), nx.wheel_graph(8), nx.cubical_graph()):
            expected = nx.to_graph6_bytes(graph, header=False).decode().strip()
            simple = SimpleGraph(
                graph.number_of_nodes(), tuple(graph.edges())
            )
            assert emit_graph6(simple) == expected

    def test_inverse_of_parse(self, small_atlas):
        """Test that parse(emit(g)) returns g on the small atlas."""
        for graph in small_atlas:
            assert parse_graph6(emit_graph6(graph)) == graph


class TestGraph6Streams:
    """Test line oriented reading and writing."""

    def test_read_reports_errors_per_line(self):
        """Test that bad lines are reported with their numbers, blanks skipped."""
        stream = io.StringIO("C~\n\nA`\nBw\n")
        results = list(read_graph6_lines(stream))
        assert [number for number, _, _ in results] == [1, 3, 4]
        assert results[0][1] == complete_graph(4)
        assert results[1][1] is None
        assert isinstance(results[1][2], Graph6ParseError)
        assert results[1][2].line == 3
        assert results[2][1].m == 3

    def test_write(self):
        """Test writing one word per line."""
        stream = io.StringIO()
        count = write_graph6_lines([complete_graph(4), complete_graph(2)], stream)
        assert count == 2
        assert stream.getvalue() == "C~\nA_\n"
