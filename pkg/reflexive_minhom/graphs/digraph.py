import numpy as np


class UnknownVertexException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class DuplicateVertexException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class DuplicateArcException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def _index_vertices(vertices):
    index = {}

    for position, vertex in enumerate(vertices):
        if vertex in index:
            raise DuplicateVertexException(f"Duplicate vertex id {vertex}")
        index[vertex] = position

    return index


def _iterate_bits(mask):
    while mask:
        low_bit = mask & -mask
        yield low_bit.bit_length() - 1
        mask ^= low_bit


class Digraph(object):
    """
    A digraph on named vertices, loops allowed. Vertex names are strings; internally each vertex gets the index of
    its position in the declared order, and adjacency is held as one integer bitset per vertex (successors and
    predecessors), so arc tests are a shift and a mask.
    Instances are not modified after construction.
    """

    def __init__(self, vertices, arcs, name="h"):
        self._vertices = tuple(vertices)
        self._index = _index_vertices(self._vertices)
        self._name = name
        self._successors = [0] * len(self._vertices)
        self._predecessors = [0] * len(self._vertices)
        self._arc_count = 0

        for tail, head in arcs:
            tail_index = self._vertex_index(tail)
            head_index = self._vertex_index(head)

            if self._successors[tail_index] >> head_index & 1:
                raise DuplicateArcException(f"Duplicate arc {tail}->{head}")

            self._successors[tail_index] |= 1 << head_index
            self._predecessors[head_index] |= 1 << tail_index
            self._arc_count += 1

    @classmethod
    def from_index_arcs(cls, vertices, index_arcs, name="h"):
        vertices = tuple(vertices)
        return cls(vertices, [(vertices[tail], vertices[head]) for tail, head in index_arcs], name=name)

    def _vertex_index(self, vertex):
        if vertex not in self._index:
            raise UnknownVertexException(f"Unknown vertex {vertex}")
        return self._index[vertex]

    @property
    def name(self):
        return self._name

    @property
    def vertices(self):
        return self._vertices

    @property
    def arcs(self):
        """
        Arcs ordered by (tail index, head index).
        """
        return tuple((self._vertices[tail], self._vertices[head]) for tail, head in self.index_arcs)

    @property
    def index_arcs(self):
        return tuple((tail, head) for tail in range(len(self._vertices))
                     for head in _iterate_bits(self._successors[tail]))

    @property
    def num_arcs(self):
        return self._arc_count

    def __len__(self):
        return len(self._vertices)

    def index_of(self, vertex):
        return self._vertex_index(vertex)

    def has_vertex(self, vertex):
        return vertex in self._index

    def has_arc(self, tail, head):
        return bool(self._successors[self._vertex_index(tail)] >> self._vertex_index(head) & 1)

    def has_arc_at(self, tail_index, head_index):
        return bool(self._successors[tail_index] >> head_index & 1)

    def successor_mask(self, index):
        return self._successors[index]

    def predecessor_mask(self, index):
        return self._predecessors[index]

    def is_reflexive(self):
        return all(self._successors[index] >> index & 1 for index in range(len(self._vertices)))

    def adjacency_matrix(self):
        size = len(self._vertices)
        matrix = np.zeros((size, size), dtype=bool)

        for tail, head in self.index_arcs:
            matrix[tail, head] = True

        return matrix

    def renamed(self, new_names, name=None):
        """
        The same digraph with vertex i called new_names[i].
        """
        return Digraph.from_index_arcs(new_names, self.index_arcs, name=name or self._name)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self._vertices == other._vertices and \
            self._successors == other._successors

    def __hash__(self):
        return hash((self._vertices, tuple(self._successors)))

    def __repr__(self):
        arcs = " ".join(f"{tail}->{head}" for tail, head in self.arcs)
        return f"Digraph({self._name}: [{' '.join(self._vertices)}] {arcs})"


class UndirectedGraph(object):
    """
    An undirected graph on named vertices, loops allowed. Same bitset layout as Digraph, with symmetric rows.
    """

    def __init__(self, vertices, edges, name="g"):
        self._vertices = tuple(vertices)
        self._index = _index_vertices(self._vertices)
        self._name = name
        self._neighbors = [0] * len(self._vertices)
        self._edge_count = 0

        for first, second in edges:
            first_index = self._vertex_index(first)
            second_index = self._vertex_index(second)

            if self._neighbors[first_index] >> second_index & 1:
                raise DuplicateArcException(f"Duplicate edge {first}-{second}")

            self._neighbors[first_index] |= 1 << second_index
            self._neighbors[second_index] |= 1 << first_index
            self._edge_count += 1

    @classmethod
    def from_index_edges(cls, vertices, index_edges, name="g"):
        vertices = tuple(vertices)
        return cls(vertices, [(vertices[first], vertices[second]) for first, second in index_edges], name=name)

    def _vertex_index(self, vertex):
        if vertex not in self._index:
            raise UnknownVertexException(f"Unknown vertex {vertex}")
        return self._index[vertex]

    @property
    def name(self):
        return self._name

    @property
    def vertices(self):
        return self._vertices

    @property
    def index_edges(self):
        """
        Each edge once, as (i, j) with i <= j.
        """
        return tuple((first, second) for first in range(len(self._vertices))
                     for second in _iterate_bits(self._neighbors[first] >> first << first))

    @property
    def edges(self):
        return tuple((self._vertices[first], self._vertices[second]) for first, second in self.index_edges)

    @property
    def num_edges(self):
        return self._edge_count

    def __len__(self):
        return len(self._vertices)

    def index_of(self, vertex):
        return self._vertex_index(vertex)

    def has_vertex(self, vertex):
        return vertex in self._index

    def has_edge(self, first, second):
        return bool(self._neighbors[self._vertex_index(first)] >> self._vertex_index(second) & 1)

    def has_edge_at(self, first_index, second_index):
        return bool(self._neighbors[first_index] >> second_index & 1)

    def neighbor_mask(self, index):
        return self._neighbors[index]

    def is_reflexive(self):
        return all(self._neighbors[index] >> index & 1 for index in range(len(self._vertices)))

    def __eq__(self, other):
        return isinstance(other, UndirectedGraph) and self._vertices == other._vertices and \
            self._neighbors == other._neighbors

    def __hash__(self):
        return hash((self._vertices, tuple(self._neighbors)))

    def __repr__(self):
        edges = " ".join(f"{first}-{second}" for first, second in self.edges)
        return f"UndirectedGraph({self._name}: [{' '.join(self._vertices)}] {edges})"


class BipartiteGraph(object):
    """
    A bipartite graph with a fixed colouring: white vertices on one side, black on the other, edges only between
    the two. Names must be distinct across both colour classes (B(H) uses v' and v'').
    white_masks[i] holds the black neighbours of white vertex i; black_masks[j] the white neighbours of black j.
    """

    def __init__(self, white, black, edges, name="b"):
        self._white = tuple(white)
        self._black = tuple(black)
        self._white_index = _index_vertices(self._white)
        self._black_index = _index_vertices(self._black)
        self._name = name

        shared = set(self._white_index) & set(self._black_index)
        if len(shared) > 0:
            raise DuplicateVertexException(f"Vertices {sorted(shared)} are both white and black")

        self._white_masks = [0] * len(self._white)
        self._black_masks = [0] * len(self._black)
        self._edge_count = 0

        for white_vertex, black_vertex in edges:
            if white_vertex not in self._white_index:
                raise UnknownVertexException(f"Unknown white vertex {white_vertex}")
            if black_vertex not in self._black_index:
                raise UnknownVertexException(f"Unknown black vertex {black_vertex}")

            white_position = self._white_index[white_vertex]
            black_position = self._black_index[black_vertex]

            if self._white_masks[white_position] >> black_position & 1:
                raise DuplicateArcException(f"Duplicate edge {white_vertex}-{black_vertex}")

            self._white_masks[white_position] |= 1 << black_position
            self._black_masks[black_position] |= 1 << white_position
            self._edge_count += 1

    @classmethod
    def from_index_edges(cls, white, black, index_edges, name="b"):
        white = tuple(white)
        black = tuple(black)
        return cls(white, black, [(white[first], black[second]) for first, second in index_edges], name=name)

    @property
    def name(self):
        return self._name

    @property
    def white(self):
        return self._white

    @property
    def black(self):
        return self._black

    @property
    def index_edges(self):
        return tuple((white_position, black_position) for white_position in range(len(self._white))
                     for black_position in _iterate_bits(self._white_masks[white_position]))

    @property
    def edges(self):
        return tuple((self._white[first], self._black[second]) for first, second in self.index_edges)

    @property
    def num_edges(self):
        return self._edge_count

    def __len__(self):
        return len(self._white) + len(self._black)

    def white_index_of(self, vertex):
        if vertex not in self._white_index:
            raise UnknownVertexException(f"Unknown white vertex {vertex}")
        return self._white_index[vertex]

    def black_index_of(self, vertex):
        if vertex not in self._black_index:
            raise UnknownVertexException(f"Unknown black vertex {vertex}")
        return self._black_index[vertex]

    def has_edge(self, white_vertex, black_vertex):
        return bool(self._white_masks[self.white_index_of(white_vertex)] >> self.black_index_of(black_vertex) & 1)

    def has_edge_at(self, white_position, black_position):
        return bool(self._white_masks[white_position] >> black_position & 1)

    def white_mask(self, white_position):
        return self._white_masks[white_position]

    def black_mask(self, black_position):
        return self._black_masks[black_position]

    def swapped(self):
        """
        The same graph with the colour classes exchanged.
        """
        return BipartiteGraph.from_index_edges(self._black, self._white,
                                               [(second, first) for first, second in self.index_edges],
                                               name=self._name)

    def __eq__(self, other):
        return isinstance(other, BipartiteGraph) and self._white == other._white and \
            self._black == other._black and self._white_masks == other._white_masks

    def __hash__(self):
        return hash((self._white, self._black, tuple(self._white_masks)))

    def __repr__(self):
        edges = " ".join(f"{first}-{second}" for first, second in self.edges)
        return f"BipartiteGraph({self._name}: white [{' '.join(self._white)}] black [{' '.join(self._black)}] {edges})"


class Embedding(object):
    """
    An injective map from pattern vertices to host vertices witnessing an induced copy of the pattern.
    """

    def __init__(self, pairs):
        self._pairs = tuple(pairs)

    @property
    def pairs(self):
        return self._pairs

    def as_dict(self):
        return dict(self._pairs)

    def image(self, pattern_vertex):
        return self.as_dict()[pattern_vertex]

    @property
    def host_vertices(self):
        return tuple(host for _, host in self._pairs)

    def __len__(self):
        return len(self._pairs)

    def __eq__(self, other):
        return isinstance(other, Embedding) and self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return "Embedding(" + " ".join(f"{pattern}->{host}" for pattern, host in self._pairs) + ")"
