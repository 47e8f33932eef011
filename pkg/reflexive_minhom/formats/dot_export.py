"""
Graphviz DOT documents for verdict evidence. Output only; nothing here calls Graphviz.
"""
from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph, BipartiteGraph

HIGHLIGHT = 'style=filled, fillcolor="lightblue"'


def _quote(name):
    return '"' + name.replace('"', '\\"') + '"'


def _lines_for(graph, highlighted, ranks):
    lines = []

    if isinstance(graph, BipartiteGraph):
        vertices = list(graph.white) + list(graph.black)
        shapes = {vertex: "circle" for vertex in graph.white}
        shapes.update({vertex: "doublecircle" for vertex in graph.black})
        connections = [(first, second, "--") for first, second in graph.edges]
    elif isinstance(graph, UndirectedGraph):
        vertices = list(graph.vertices)
        shapes = {vertex: "circle" for vertex in vertices}
        connections = [(first, second, "--") for first, second in graph.edges if first != second]
    else:
        vertices = list(graph.vertices)
        shapes = {vertex: "circle" for vertex in vertices}
        connections = [(tail, head, "->") for tail, head in graph.arcs if tail != head]

    for vertex in vertices:
        label = f"{vertex} ({ranks[vertex]})" if vertex in ranks else vertex
        attributes = [f"label={_quote(label)}", f"shape={shapes[vertex]}"]
        if vertex in highlighted:
            attributes.append(HIGHLIGHT)
        lines.append(f"    {_quote(vertex)} [{', '.join(attributes)}];")

    for first, second, connector in connections:
        emphasis = " [penwidth=2]" if first in highlighted and second in highlighted else ""
        lines.append(f"    {_quote(first)} {connector} {_quote(second)}{emphasis};")

    return lines


def to_dot(graph, highlighted=(), ordering=None, title=None):
    """
    graph may be a Digraph, UndirectedGraph or BipartiteGraph. Loops are left implicit. highlighted vertices are
    filled; an ordering labels each vertex with its 1-based rank.
    """
    directed = isinstance(graph, Digraph)
    ranks = {vertex: position + 1 for position, vertex in enumerate(ordering)} if ordering is not None else {}
    name = _quote(title or graph.name)

    lines = [f"digraph {name} {{" if directed else f"graph {name} {{"]
    lines += _lines_for(graph, set(highlighted), ranks)
    lines.append("}")
    return "\n".join(lines) + "\n"
