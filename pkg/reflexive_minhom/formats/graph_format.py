"""
Text format for three-coloured undirected graphs, the inputs of the hardness reductions:

    graph x
    vertices: a b c
    edges: a-b b-c
    colors: a=U b=V c=W
"""
import re
from reflexive_minhom.formats.digraph_format import DigraphSyntaxError, tokenize, split_keyword, parse_header, \
    parse_vertices
from reflexive_minhom.graphs.digraph import UndirectedGraph
from reflexive_minhom.hardness.three_colored_graph import ThreeColoredGraph, COLORS

EDGE = re.compile(r"^([A-Za-z0-9_]+)-([A-Za-z0-9_]+)$")
COLOR_ASSIGNMENT = re.compile(r"^([A-Za-z0-9_]+)=([A-Za-z0-9_]+)$")


def parse_three_colored_graph(text):
    lines = tokenize(text)
    name = parse_header(lines, "graph")
    vertices = None
    edges = []
    edge_set = set()
    colors = {}

    for line_number, content, tokens in lines:
        vertex_tokens = split_keyword(tokens, "vertices")
        edge_tokens = split_keyword(tokens, "edges")
        color_tokens = split_keyword(tokens, "colors")

        if vertex_tokens is not None:
            if vertices is not None:
                raise DigraphSyntaxError("Vertices declared twice", line_number, tokens[0][0])
            vertices = []
            parse_vertices(vertex_tokens, line_number, vertices)
            continue

        if vertices is None:
            raise DigraphSyntaxError("Expected the vertices line first", line_number, tokens[0][0])

        if edge_tokens is not None:
            for column, token in edge_tokens:
                match = EDGE.match(token)
                if match is None:
                    raise DigraphSyntaxError(f"Malformed edge {token}, expected first-second", line_number, column)

                for endpoint in match.groups():
                    if endpoint not in vertices:
                        raise DigraphSyntaxError(f"Edge {token} uses unknown vertex {endpoint}", line_number, column)

                key = frozenset(match.groups())
                if key in edge_set:
                    raise DigraphSyntaxError(f"Duplicate edge {token}", line_number, column)

                edge_set.add(key)
                edges.append(match.groups())

        elif color_tokens is not None:
            for column, token in color_tokens:
                match = COLOR_ASSIGNMENT.match(token)
                if match is None or match.group(2) not in COLORS:
                    raise DigraphSyntaxError(f"Malformed colour {token}, expected vertex=U, V or W",
                                             line_number, column)
                if match.group(1) not in vertices:
                    raise DigraphSyntaxError(f"Colour given for unknown vertex {match.group(1)}", line_number, column)

                colors[match.group(1)] = match.group(2)

        else:
            raise DigraphSyntaxError(f"Unexpected line '{content}'", line_number, tokens[0][0])

    if vertices is None:
        raise DigraphSyntaxError("Missing vertices line", 1, 1)

    return ThreeColoredGraph(UndirectedGraph(vertices, edges, name=name), colors)


def serialize_three_colored_graph(colored_graph):
    edges = " ".join(f"{first}-{second}" for first, second in colored_graph.graph.edges)
    colors = " ".join(f"{vertex}={colored_graph.color_of(vertex)}" for vertex in colored_graph.vertices)
    lines = [f"graph {colored_graph.name}",
             f"vertices: {' '.join(colored_graph.vertices)}".rstrip(),
             f"edges: {edges}".rstrip(),
             f"colors: {colors}".rstrip()]
    return "\n".join(lines) + "\n"


def load_three_colored_graph(file_path):
    with open(file_path, "r") as graph_file:
        return parse_three_colored_graph(graph_file.read())
