"""Tests for regular graph enumeration and census tables."""

import networkx as nx
import pytest
from pydantic import ValidationError

from rigikit.errors import DomainError, EnumerationGuardError
from rigikit.models.census_models import CensusCounts, CensusFilters
from rigikit.services.canonical_service import canonical_form
from rigikit.services.census_service import (
    census_table,
    classify_graphs,
    cubic_low_connectivity_scan,
    enumerate_regular,
)
from rigikit.services.connectivity_service import edge_connectivity
from rigikit.services.graph6_service import emit_graph6, parse_graph6
from rigikit.services.graph_service import (
    is_bipartite,
    is_connected,
    prism_graph,
    regular_degree,
    to_networkx,
)


class TestEnumerateRegular:
    """Test isomorph-free enumeration."""

    @pytest.mark.parametrize(
        "n, k, expected",
        [(4, 3, 1), (6, 3, 2), (8, 3, 5), (5, 4, 1), (7, 4, 2), (8, 4, 6), (6, 2, 1)],
    )
    def test_connected_counts(self, n, k, expected):
        """Test counts of connected k-regular graphs."""
        graphs = list(enumerate_regular(n, k))
        assert len(graphs) == expected
        for graph in graphs:
            assert regular_degree(graph) == k
            assert is_connected(graph)

    def test_pairwise_non_isomorphic(self):
        """Test that representatives are distinct up to isomorphism."""
        graphs = [to_networkx(g) for g in enumerate_regular(8, 3, connected=False)]
        assert len(graphs) == 6
        for i, first in enumerate(graphs):
            for second in graphs[i + 1:]:
                assert not nx.is_isomorphic(first, second)

    def test_disconnected_cycles(self):
        """Test that 2-regular graphs on six vertices are C6 and two triangles."""
        assert len(list(enumerate_regular(6, 2, connected=False))) == 2

    def test_bipartite(self):
        """Test bipartite cubic graphs."""
        assert len(list(enumerate_regular(8, 3, bipartite=True))) == 1
        graphs = list(enumerate_regular(10, 3, bipartite=True))
        assert len(graphs) == 2
        assert all(is_bipartite(g) for g in graphs)

    def test_edgeless(self):
        """Test k = 0."""
        assert [g.n for g in enumerate_regular(1, 0)] == [1]
        assert list(enumerate_regular(3, 0)) == []
        assert len(list(enumerate_regular(3, 0, connected=False))) == 1

    def test_impossible_requests(self):
        """Test parity, degree and bipartite side conditions."""
        with pytest.raises(DomainError):
            list(enumerate_regular(7, 3))
        with pytest.raises(DomainError):
            list(enumerate_regular(4, 4))
        with pytest.raises(DomainError):
            list(enumerate_regular(6, 4, bipartite=True))

    def test_complement_path_is_canonical(self):
        """Test that dense rows built from complements come out canonically labeled."""
        graphs = list(enumerate_regular(8, 5))
        assert len(graphs) == 3
        for graph in graphs:
            assert emit_graph6(graph) == canonical_form(graph).word

    def test_guard(self):
        """Test the size guard and its override flag."""
        with pytest.raises(EnumerationGuardError) as excinfo:
            next(enumerate_regular(16, 3))
        assert excinfo.value.limit == 14


class TestCensusTable:
    """Test census rows."""

    def test_small_rows(self):
        """Test Ramanujan counts of small 4- and 5-regular rows."""
        assert census_table(7, 4).counts.ramanujan == 2
        assert census_table(8, 4).counts.ramanujan == 6
        assert census_table(8, 5).counts.ramanujan == 3

    def test_bipartite_row(self):
        """Test that K4,4 is the only bipartite 4-regular graph on 8 vertices."""
        row = census_table(8, 4, CensusFilters(bipartite=True), dump=True)
        assert row.counts.total == 1
        assert row.counts.ramanujan == 1
        (word,) = row.ramanujan_graph6
        k44 = nx.complete_bipartite_graph(4, 4)
        assert nx.is_isomorphic(to_networkx(parse_graph6(word)), k44)

    def test_cubic_histograms(self):
        """Test the edge connectivity histogram of connected cubic graphs on 8."""
        row = census_table(8, 3)
        assert row.counts.total == 5
        assert sum(row.counts.edge_connectivity.values()) == 5
        ramanujan = row.counts.ramanujan_edge_connectivity
        assert sum(ramanujan.values()) == row.counts.ramanujan
        assert row.csv_values()[:2] == ["8", "3"]
        assert len(row.csv_header()) == len(row.csv_values())

    def test_threads_do_not_change_counts(self):
        """Test that worker processes give the same row."""
        assert census_table(8, 4, threads=2).counts == census_table(8, 4).counts

    def test_vertex_transitive_filter_keeps_disconnected(self):
        """Test that the vertex-transitive filter drops the connected restriction."""
        assert CensusFilters(vertex_transitive=True).connected is False
        assert CensusFilters().connected is True

    @pytest.mark.parametrize("n, expected", [(10, 4), (11, 2)])
    def test_vertex_transitive_rows(self, n, expected):
        """Test 4-regular vertex-transitive Ramanujan counts on 10 and 11 vertices."""
        row = census_table(n, 4, CensusFilters(vertex_transitive=True), dump=True)
        assert row.counts.ramanujan == expected
        assert row.counts.rigid >= row.counts.globally_rigid

    def test_two_copies_of_k5_counted(self):
        """Test that 2K5 is the disconnected member of the 10-vertex row."""
        row = census_table(10, 4, CensusFilters(vertex_transitive=True), dump=True)
        graphs = [to_networkx(parse_graph6(word)) for word in row.ramanujan_graph6]
        disconnected = [g for g in graphs if not nx.is_connected(g)]
        assert len(disconnected) == 1
        two_k5 = nx.disjoint_union(nx.complete_graph(5), nx.complete_graph(5))
        assert nx.is_isomorphic(disconnected[0], two_k5)

    def test_counts_are_nested(self):
        """Test the counts validator."""
        with pytest.raises(ValidationError):
            CensusCounts(total=1, ramanujan=2)
        with pytest.raises(ValidationError):
            CensusCounts(total=3, ramanujan=3, rigid=2, globally_rigid=1)

    def test_classify(self):
        """Test classification records of K4 and the 3-prism."""
        records = classify_graphs(["C~", emit_graph6(prism_graph(3))])
        assert records[0]["ramanujan"] and records[0]["globally_rigid"]
        assert records[0]["edge_connectivity"] == 3
        assert records[1]["edge_connectivity"] == 3
        assert records[1]["rigid"] and not records[1]["globally_rigid"]


class TestCubicScan:
    """Test the scan for bridged cubic Ramanujan graphs."""

    def test_ten_vertices(self):
        """Test that one cubic Ramanujan graph on 10 vertices has a bridge."""
        found = cubic_low_connectivity_scan(10)
        assert len(found) == 1
        assert found[0].n == 10
        assert edge_connectivity(found[0])[0] == 1

    def test_guard(self):
        """Test the cubic guard."""
        with pytest.raises(EnumerationGuardError):
            cubic_low_connectivity_scan(16)

    @pytest.mark.slow
    def test_up_to_fourteen(self):
        """Test the counts 1, 3, 0 on 10, 12 and 14 vertices."""
        found = cubic_low_connectivity_scan(14)
        assert [g.n for g in found] == [10, 12, 12, 12]


@pytest.mark.slow
class TestGoldenCensus:
    """Test larger census rows against known counts."""

    def test_connected_cubic_ten(self):
        """Test the 19 connected cubic graphs on 10 vertices."""
        assert census_table(10, 3).counts.total == 19

    @pytest.mark.parametrize(
        "n, k, expected",
        [
            (9, 4, 15),
            (10, 4, 57),
            (11, 4, 247),
            (12, 4, 1476),
            (10, 5, 59),
            (9, 6, 4),
            (10, 6, 21),
            (10, 7, 5),
        ],
    )
    def test_ramanujan_counts(self, n, k, expected):
        """Test counts of connected Ramanujan graphs."""
        assert census_table(n, k).counts.ramanujan == expected

    @pytest.mark.parametrize("n, expected", [(10, 1), (11, 3), (12, 17)])
    def test_rigid_not_globally_rigid(self, n, expected):
        """Test 4-regular Ramanujan graphs rigid but not globally rigid."""
        assert census_table(n, 4).counts.rigid_not_gr == expected

    @pytest.mark.parametrize(
        "n, k, expected",
        [
            (10, 4, 1),
            (12, 4, 4),
            (14, 4, 14),
            (10, 5, 1),
            (12, 5, 1),
            (14, 5, 4),
            (12, 6, 1),
            (14, 6, 1),
            (14, 7, 1),
        ],
    )
    def test_bipartite_ramanujan_counts(self, n, k, expected):
        """Test counts of bipartite Ramanujan graphs."""
        row = census_table(n, k, CensusFilters(bipartite=True))
        assert row.counts.ramanujan == expected

    def test_vertex_transitive_twelve(self):
        """Test the 11 vertex-transitive 4-regular Ramanujan graphs on 12 vertices."""
        row = census_table(12, 4, CensusFilters(vertex_transitive=True))
        assert row.counts.ramanujan == 11
