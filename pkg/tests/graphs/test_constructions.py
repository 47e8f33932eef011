import pytest
from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph, BipartiteGraph, UnknownVertexException
from reflexive_minhom.graphs.constructions import symmetric_subgraph, underlying_graph, bipartite_double, converse, \
    induced_subgraph, as_symmetric_digraph, induced_undirected, induced_bipartite


class TestConstructions(object):

    @pytest.fixture
    def digraph(self):
        # A digon between a and b, a single arc b->c, all loops
        return Digraph(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a"), ("b", "c")],
                       name="h")

    def test_symmetric_subgraph_keeps_digons_and_loops(self, digraph):
        # Act
        graph = symmetric_subgraph(digraph)

        # Assert
        assert graph.name == "S(h)"
        assert graph.edges == (("a", "a"), ("a", "b"), ("b", "b"), ("c", "c"))
        assert not graph.has_edge("b", "c")

    def test_underlying_graph_keeps_every_adjacency(self, digraph):
        # Act
        graph = underlying_graph(digraph)

        # Assert
        assert graph.name == "U(h)"
        assert graph.has_edge("c", "b")
        assert graph.num_edges == 5

    def test_underlying_graph_of_backward_arc(self):
        # Arrange
        digraph = Digraph(["a", "b"], [("b", "a")])

        # Act
        graph = underlying_graph(digraph)

        # Assert
        assert graph.edges == (("a", "b"),)

    def test_bipartite_double(self, digraph):
        # Act
        double = bipartite_double(digraph)

        # Assert
        assert double.name == "B(h)"
        assert double.white == ("a'", "b'", "c'")
        assert double.black == ("a''", "b''", "c''")
        assert double.num_edges == digraph.num_arcs
        assert double.has_edge("b'", "c''")
        assert not double.has_edge("c'", "b''")

    def test_converse_reverses_every_arc(self, digraph):
        # Act
        reversed_digraph = converse(digraph)

        # Assert
        assert reversed_digraph.name == "h^c"
        assert reversed_digraph.has_arc("c", "b")
        assert not reversed_digraph.has_arc("b", "c")
        assert converse(reversed_digraph).index_arcs == digraph.index_arcs

    def test_induced_subgraph_keeps_declared_order(self, digraph):
        # Act
        subgraph = induced_subgraph(digraph, ["c", "b"])

        # Assert
        assert subgraph.vertices == ("b", "c")
        assert subgraph.arcs == (("b", "b"), ("b", "c"), ("c", "c"))

    def test_induced_subgraph_unknown_vertex_raises(self, digraph):
        with pytest.raises(UnknownVertexException):
            induced_subgraph(digraph, ["a", "z"])

    def test_as_symmetric_digraph(self):
        # Arrange
        graph = UndirectedGraph(["a", "b"], [("a", "a"), ("a", "b")])

        # Act
        digraph = as_symmetric_digraph(graph)

        # Assert
        assert digraph.arcs == (("a", "a"), ("a", "b"), ("b", "a"))

    def test_induced_undirected_and_bipartite(self):
        # Arrange
        graph = UndirectedGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
        bipartite = BipartiteGraph(["w0", "w1"], ["b0", "b1"], [("w0", "b0"), ("w1", "b1"), ("w1", "b0")])

        # Act
        undirected_part = induced_undirected(graph, ["a", "b"])
        bipartite_part = induced_bipartite(bipartite, ["w1", "b1"])

        # Assert
        assert undirected_part.edges == (("a", "b"),)
        assert bipartite_part.white == ("w1",)
        assert bipartite_part.black == ("b1",)
        assert bipartite_part.num_edges == 1
