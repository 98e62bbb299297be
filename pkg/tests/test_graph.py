from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graph_and_set, graphs
from isolator.formats import GraphFormatError, dump_graph, from_edgelist, from_graph6, read_graph, to_graph6
from isolator.graph import Graph, GraphError, disjoint_union, glue_at, members, to_mask

P4 = Graph.path(4)
K3 = Graph.complete(3)


class TestNeighborhoods:
    def test_neighborhood_examples(self):
        assert members(K3.neighborhood(0b001)) == [1, 2]
        assert P4.neighborhood(P4.vertex_mask) == 0
        assert members(P4.neighborhood(to_mask([1, 2]))) == [0, 3]

    def test_closed_neighborhood_examples(self):
        assert members(K3.closed_neighborhood(1)) == [0, 1, 2]
        assert members(Graph.empty(3).closed_neighborhood(1)) == [0]
        assert members(P4.closed_neighborhood(1 << 1)) == [0, 1, 2]

    def test_frontier_examples(self):
        assert P4.frontier(P4.vertex_mask) == 0
        assert members(Graph.complete(4).frontier(0b11)) == [0, 1]
        assert members(P4.frontier(0b11)) == [1]

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            K3.neighborhood(1 << 3)
        with pytest.raises(GraphError):
            K3.degree(5)

    @given(graph_and_set())
    def test_frontier_identity(self, gs):
        g, s = gs
        rest = g.vertex_mask & ~s
        assert g.frontier(s) == g.neighborhood(rest)
        assert g.frontier(s) == g.neighborhood(rest) & s
        assert g.neighborhood(s) & s == 0
        assert g.closed_neighborhood(s) == s | g.neighborhood(s)


class TestStructure:
    def test_induced_subgraph_examples(self):
        h, old = Graph.complete(4).induced_subgraph(0b0111)
        assert h == K3 and old == [0, 1, 2]
        h, _ = P4.induced_subgraph(to_mask([0, 2]))
        assert h.n == 2 and h.num_edges == 0
        h, _ = Graph.cycle(5).induced_subgraph(to_mask([1, 2, 3, 4]))
        assert h == Graph.path(4)

    @given(graph_and_set())
    def test_induced_edge_count(self, gs):
        g, s = gs
        h, old = g.induced_subgraph(s)
        assert h.n == len(old)
        assert h.num_edges == sum(1 for u, v in g.edges() if s >> u & 1 and s >> v & 1)

    def test_components_examples(self):
        assert Graph.cycle(5).components() == [0b11111]
        two_triangles = disjoint_union(K3, K3)
        assert [members(c) for c in two_triangles.components()] == [[0, 1, 2], [3, 4, 5]]
        p5 = Graph.path(5)
        assert [members(c) for c in p5.components(p5.vertex_mask & ~(1 << 2))] == [[0, 1], [3, 4]]

    def test_components_sorted_by_size(self):
        g = disjoint_union(Graph.complete(3), Graph.complete(1), Graph.complete(2))
        assert [members(c) for c in g.components()] == [[3], [4, 5], [0, 1, 2]]

    def test_min_degree_examples(self):
        assert Graph.complete(5).min_degree() == (0, 4)
        assert Graph.complete_bipartite(1, 4).min_degree() == (1, 1)
        assert P4.min_degree() == (0, 1)

    def test_invariants(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 3)])
        assert Graph.from_edges(3, [(0, 1), (1, 0)]).num_edges == 1

    def test_glue_at(self):
        g = glue_at(Graph.complete(4), Graph.complete(4), [(0, 0), (1, 1)])
        assert g.n == 6 and g.num_edges == 11

    def test_empty_graph(self):
        g = Graph.empty(0)
        assert g.n == 0 and g.components() == [] and g.edges() == []


class TestFormats:
    @given(graphs(max_n=20))
    @settings(max_examples=200)
    def test_roundtrip(self, g):
        assert from_edgelist(dump_graph(g)) == g
        assert from_graph6(to_graph6(g)) == g

    @given(graphs(max_n=70, min_n=1))
    @settings(max_examples=50)
    def test_graph6_matches_networkx(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()

    def test_graph6_known_values(self):
        assert to_graph6(Graph.complete(4)) == "C~"
        assert to_graph6(Graph.path(3)) == "Bg"

    def test_large_graph6(self):
        g = Graph.cycle(70)
        assert from_graph6(to_graph6(g)) == g

    @pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 2\n", "2 2\n0 1\n0 1\n", "3 1\n1 0\n", "2 1\nx y\n"])
    def test_bad_edgelist(self, text):
        with pytest.raises(GraphFormatError):
            from_edgelist(text)

    def test_read_graph_by_suffix(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("C~\n")
        assert read_graph(p) == Graph.complete(4)
        q = tmp_path / "g.el"
        q.write_text(dump_graph(P4))
        assert read_graph(q) == P4
