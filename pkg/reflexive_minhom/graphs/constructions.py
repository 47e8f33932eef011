from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph, BipartiteGraph


def white_name(vertex):
    return f"{vertex}'"


def black_name(vertex):
    return f"{vertex}''"


def symmetric_subgraph(digraph):
    """
    S(H): an edge uv for every digon of H. Loops of H stay loops.
    """
    edges = [(digraph.vertices[tail], digraph.vertices[head]) for tail, head in digraph.index_arcs
             if tail <= head and digraph.has_arc_at(head, tail)]
    return UndirectedGraph(digraph.vertices, edges, name=f"S({digraph.name})")


def underlying_graph(digraph):
    """
    U(H): an edge uv whenever either arc uv or vu is present.
    """
    edges = [(digraph.vertices[tail], digraph.vertices[head]) for tail, head in digraph.index_arcs
             if tail <= head or not digraph.has_arc_at(head, tail)]
    return UndirectedGraph(digraph.vertices, edges, name=f"U({digraph.name})")


def bipartite_double(digraph):
    """
    B(H): white v', black v'' for every vertex, and an edge v'w'' for every arc vw (loops included).
    """
    white = [white_name(vertex) for vertex in digraph.vertices]
    black = [black_name(vertex) for vertex in digraph.vertices]
    return BipartiteGraph.from_index_edges(white, black, digraph.index_arcs, name=f"B({digraph.name})")


def converse(digraph):
    return Digraph.from_index_arcs(digraph.vertices, [(head, tail) for tail, head in digraph.index_arcs],
                                   name=f"{digraph.name}^c")


def induced_subgraph(digraph, vertex_subset, name=None):
    """
    The subgraph induced by vertex_subset. Vertices keep the relative order they have in the digraph.
    """
    requested = set(vertex_subset)
    for vertex in requested:
        digraph.index_of(vertex)  # Raises for unknown vertices

    kept = [vertex for vertex in digraph.vertices if vertex in requested]
    arcs = [(tail, head) for tail, head in digraph.arcs if tail in requested and head in requested]
    return Digraph(kept, arcs, name=name or digraph.name)


def as_symmetric_digraph(graph):
    """
    An undirected graph read as a digraph with both arcs per edge (one arc per loop).
    """
    arcs = []
    for first, second in graph.index_edges:
        arcs.append((first, second))
        if first != second:
            arcs.append((second, first))

    return Digraph.from_index_arcs(graph.vertices, arcs, name=graph.name)


def induced_undirected(graph, vertex_subset, name=None):
    requested = set(vertex_subset)
    for vertex in requested:
        graph.index_of(vertex)

    kept = [vertex for vertex in graph.vertices if vertex in requested]
    edges = [(first, second) for first, second in graph.edges if first in requested and second in requested]
    return UndirectedGraph(kept, edges, name=name or graph.name)


def induced_bipartite(graph, vertex_subset, name=None):
    """
    The bipartite subgraph induced by vertex_subset, which may mix white and black vertices.
    """
    requested = set(vertex_subset)
    for vertex in requested:
        if vertex in graph.white:
            graph.white_index_of(vertex)
        else:
            graph.black_index_of(vertex)

    white = [vertex for vertex in graph.white if vertex in requested]
    black = [vertex for vertex in graph.black if vertex in requested]
    edges = [(first, second) for first, second in graph.edges if first in requested and second in requested]
    return BipartiteGraph(white, black, edges, name=name or graph.name)
