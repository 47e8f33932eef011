import pytest
from reflexive_minhom.formats.digraph_format import DigraphSyntaxError
from reflexive_minhom.formats.graph_format import parse_three_colored_graph, serialize_three_colored_graph
from reflexive_minhom.hardness.three_colored_graph import InvalidColoringException


class TestThreeColoredGraphFormat(object):

    def test_parse(self):
        # Arrange
        text = "graph x\n" \
               "vertices: a b c\n" \
               "edges: a-b b-c\n" \
               "colors: a=U b=V\n" \
               "colors: c=W\n"

        # Act
        colored_graph = parse_three_colored_graph(text)

        # Assert
        assert colored_graph.name == "x"
        assert colored_graph.vertices == ("a", "b", "c")
        assert colored_graph.graph.edges == (("a", "b"), ("b", "c"))
        assert colored_graph.color_of("c") == "W"

    def test_serialize_then_parse(self):
        # Arrange
        text = "graph y\nvertices: w u v\nedges: w-u u-v\ncolors: w=W u=U v=V\n"

        # Act
        serialized = serialize_three_colored_graph(parse_three_colored_graph(text))

        # Assert
        assert serialized == text

    @pytest.mark.parametrize("text, line, column", [
        ("digraph x\nvertices: a\n", 1, 1),
        ("graph x\nedges: a-b\n", 2, 1),
        ("graph x\nvertices: a b\nedges: a-c\n", 3, 8),
        ("graph x\nvertices: a b\nedges: a-b b-a\ncolors: a=U b=V\n", 3, 12),
        ("graph x\nvertices: a b\nedges: a->b\n", 3, 8),
        ("graph x\nvertices: a\ncolors: a=X\n", 3, 9),
        ("graph x\nvertices: a\ncolors: b=U\n", 3, 9),
    ])
    def test_syntax_errors(self, text, line, column):
        # Act
        with pytest.raises(DigraphSyntaxError) as error:
            parse_three_colored_graph(text)

        # Assert
        assert (error.value.line, error.value.column) == (line, column)

    def test_missing_colour_raises(self):
        with pytest.raises(InvalidColoringException):
            parse_three_colored_graph("graph x\nvertices: a b\ncolors: a=U\n")

    def test_edge_inside_a_class_raises(self):
        with pytest.raises(InvalidColoringException):
            parse_three_colored_graph("graph x\nvertices: a b\nedges: a-b\ncolors: a=U b=U\n")
