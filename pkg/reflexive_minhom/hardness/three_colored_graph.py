from reflexive_minhom.graphs.digraph import UndirectedGraph

COLORS = ("U", "V", "W")


class InvalidColoringException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class ThreeColoredGraph(object):
    """
    An undirected graph X with its vertices split into independent classes U, V and W.
    """

    def __init__(self, graph, colors):
        self.graph = graph
        self.colors = dict(colors)

        for vertex in graph.vertices:
            if self.colors.get(vertex) not in COLORS:
                raise InvalidColoringException(f"Vertex {vertex} has no colour among {', '.join(COLORS)}")

        for vertex in self.colors:
            if not graph.has_vertex(vertex):
                raise InvalidColoringException(f"Colour given for unknown vertex {vertex}")

        for first, second in graph.edges:
            if self.colors[first] == self.colors[second]:
                raise InvalidColoringException(f"Edge {first}-{second} joins two vertices of class "
                                               f"{self.colors[first]}")

    @classmethod
    def build(cls, classes, edges, name="x"):
        """
        classes maps a colour to the vertices in it, e.g. {"U": ["u1"], "V": ["v1"], "W": []}.
        """
        vertices = [vertex for color in COLORS for vertex in classes.get(color, [])]
        colors = {vertex: color for color in COLORS for vertex in classes.get(color, [])}
        return cls(UndirectedGraph(vertices, edges, name=name), colors)

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def name(self):
        return self.graph.name

    def color_of(self, vertex):
        return self.colors[vertex]

    def vertices_in(self, color):
        return [vertex for vertex in self.graph.vertices if self.colors[vertex] == color]

    def edges_between(self, first_color, second_color):
        """
        Edges with one end in each class, oriented (first_color end, second_color end), in edge order.
        """
        oriented = []
        for first, second in self.graph.edges:
            if self.colors[first] == first_color and self.colors[second] == second_color:
                oriented.append((first, second))
            elif self.colors[second] == first_color and self.colors[first] == second_color:
                oriented.append((second, first))
        return oriented

    def is_independent(self, vertex_subset):
        subset = set(vertex_subset)
        return all(not (first in subset and second in subset) for first, second in self.graph.edges)

    def __len__(self):
        return len(self.graph)
