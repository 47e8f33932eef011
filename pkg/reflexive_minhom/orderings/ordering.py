import numpy as np


class InvalidOrderingException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def _check_permutation(sequence, expected, description):
    if len(sequence) != len(expected) or set(sequence) != set(expected):
        raise InvalidOrderingException(f"{description} {list(sequence)} is not a permutation of {list(expected)}")


class Ordering(object):
    """
    A linear order on the vertices of a digraph, first element smallest.
    """

    def __init__(self, sequence):
        self._sequence = tuple(sequence)
        self._positions = {vertex: position for position, vertex in enumerate(self._sequence)}

        if len(self._positions) != len(self._sequence):
            raise InvalidOrderingException(f"Ordering {list(self._sequence)} repeats a vertex")

    @property
    def sequence(self):
        return self._sequence

    def position(self, vertex):
        return self._positions[vertex]

    def reversed(self):
        return Ordering(reversed(self._sequence))

    def check_covers(self, digraph):
        _check_permutation(self._sequence, digraph.vertices, "Ordering")

    def ordered_matrix(self, digraph):
        """
        matrix[a, b] is True when there is an arc from the a-th to the b-th vertex of the ordering.
        """
        self.check_covers(digraph)
        permutation = [digraph.index_of(vertex) for vertex in self._sequence]
        return digraph.adjacency_matrix()[np.ix_(permutation, permutation)]

    def __len__(self):
        return len(self._sequence)

    def __iter__(self):
        return iter(self._sequence)

    def __eq__(self, other):
        return isinstance(other, Ordering) and self._sequence == other._sequence

    def __hash__(self):
        return hash(self._sequence)

    def __repr__(self):
        return f"Ordering({' < '.join(self._sequence)})"


class BipartiteOrdering(object):
    """
    Separate linear orders on the white and on the black vertices of a bipartite graph.
    """

    def __init__(self, white, black):
        self._white = Ordering(white)
        self._black = Ordering(black)

    @property
    def white(self):
        return self._white.sequence

    @property
    def black(self):
        return self._black.sequence

    def white_position(self, vertex):
        return self._white.position(vertex)

    def black_position(self, vertex):
        return self._black.position(vertex)

    def check_covers(self, bipartite_graph):
        _check_permutation(self.white, bipartite_graph.white, "White ordering")
        _check_permutation(self.black, bipartite_graph.black, "Black ordering")

    def ordered_matrix(self, bipartite_graph):
        """
        matrix[a, c] is True when the a-th white vertex is adjacent to the c-th black vertex.
        """
        self.check_covers(bipartite_graph)
        matrix = np.zeros((len(self.white), len(self.black)), dtype=bool)

        for white_position, white_vertex in enumerate(self.white):
            white_index = bipartite_graph.white_index_of(white_vertex)
            for black_position, black_vertex in enumerate(self.black):
                matrix[white_position, black_position] = bipartite_graph.has_edge_at(
                    white_index, bipartite_graph.black_index_of(black_vertex))

        return matrix

    def __eq__(self, other):
        return isinstance(other, BipartiteOrdering) and self.white == other.white and self.black == other.black

    def __hash__(self):
        return hash((self.white, self.black))

    def __repr__(self):
        return f"BipartiteOrdering(white: {' < '.join(self.white)}; black: {' < '.join(self.black)})"


def _min_max_violations(matrix):
    """
    For a (rows x columns) relation with rows and columns both ordered, flags every a < b, c < d where
    (a, d) and (b, c) are related but (a, c) or (b, d) is not.
    """
    rows, columns = matrix.shape
    row_pairs = np.triu(np.ones((rows, rows), dtype=bool), k=1)
    column_pairs = np.triu(np.ones((columns, columns), dtype=bool), k=1)

    # Axes: a, b, c, d
    premise = matrix[:, None, None, :] & matrix[None, :, :, None]
    conclusion = matrix[:, None, :, None] & matrix[None, :, None, :]
    ordered = row_pairs[:, :, None, None] & column_pairs[None, None, :, :]

    return premise & ~conclusion & ordered


def is_min_max(digraph, ordering):
    """
    i < j, s < r with ir and js arcs imply is and jr are arcs.
    """
    matrix = ordering.ordered_matrix(digraph)
    return not _min_max_violations(matrix).any()


def min_max_violation(digraph, ordering):
    """
    The first (i, j, s, r) quadruple breaking the Min-Max property, or None.
    """
    matrix = ordering.ordered_matrix(digraph)
    violations = np.argwhere(_min_max_violations(matrix))

    if len(violations) == 0:
        return None

    first, second, third, fourth = violations[0]
    sequence = ordering.sequence
    return sequence[first], sequence[second], sequence[third], sequence[fourth]


def is_min_max_shortcut(digraph, ordering):
    """
    The reflexive form of the test: for i < j < k an arc ik forces ij and jk, and an arc ki forces kj and ji.
    Only equivalent to is_min_max when the digraph is reflexive.
    """
    matrix = ordering.ordered_matrix(digraph)
    size = len(ordering)

    for first in range(size):
        for last in range(first + 2, size):
            forward = matrix[first, last]
            backward = matrix[last, first]

            if not forward and not backward:
                continue

            for middle in range(first + 1, last):
                if forward and not (matrix[first, middle] and matrix[middle, last]):
                    return False
                if backward and not (matrix[last, middle] and matrix[middle, first]):
                    return False

    return True


def is_bipartite_min_max(bipartite_graph, bipartite_ordering):
    """
    White i < j, black s < r with edges ir and js imply edges is and jr.
    """
    matrix = bipartite_ordering.ordered_matrix(bipartite_graph)
    return not _min_max_violations(matrix).any()
