import pytest
import numpy as np
from itertools import permutations
from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph, BipartiteGraph, Embedding
from reflexive_minhom.graphs.embedding import find_induced, is_induced_embedding
from reflexive_minhom.graphs.patterns import reflexive_cycle, reflexive_path, claw, even_cycle


class TestFindInduced(object):

    def test_finds_four_cycle_next_to_pendant(self):
        """
        A reflexive 4-cycle with one pendant vertex contains the 4-cycle, and the embedding is induced.
        """
        # Arrange
        host = UndirectedGraph(["a", "b", "c", "d", "e"],
                               [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "e")] +
                               [(vertex, vertex) for vertex in "abcde"])
        pattern = reflexive_cycle(4)

        # Act
        embedding = find_induced(pattern, host)

        # Assert
        assert embedding is not None
        assert set(embedding.host_vertices) == {"a", "b", "c", "d"}
        assert is_induced_embedding(pattern, host, embedding)

    def test_chord_blocks_induced_copy(self):
        # Arrange
        host = UndirectedGraph(["a", "b", "c", "d"],
                               [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")] +
                               [(vertex, vertex) for vertex in "abcd"])

        # Act
        embedding = find_induced(reflexive_cycle(4), host)

        # Assert
        assert embedding is None

    def test_first_embedding_is_lexicographic(self):
        # Arrange
        host = reflexive_path(4)
        pattern = reflexive_path(2)

        # Act
        embedding = find_induced(pattern, host)

        # Assert
        assert embedding == Embedding([("p0", "p0"), ("p1", "p1")])

    def test_larger_pattern_is_not_found(self):
        assert find_induced(claw(), reflexive_path(3)) is None

    def test_digraph_embedding_respects_direction(self):
        # Arrange
        host = Digraph(["a", "b", "c"], [("a", "b"), ("c", "b")])
        pattern = Digraph(["x", "y"], [("y", "x")])

        # Act
        embedding = find_induced(pattern, host)

        # Assert
        assert embedding == Embedding([("x", "b"), ("y", "a")])

    def test_loops_compared_when_not_both_reflexive(self):
        # Arrange
        host = Digraph(["a", "b"], [("a", "a"), ("a", "b")])
        pattern = Digraph(["x"], [])

        # Act
        embedding = find_induced(pattern, host)

        # Assert
        assert embedding == Embedding([("x", "b")])

    def test_bipartite_embedding_respects_colours(self):
        # Arrange
        host = BipartiteGraph(["w0", "w1"], ["b0"], [("w0", "b0"), ("w1", "b0")])
        one_white_two_black = BipartiteGraph(["p"], ["q", "r"], [("p", "q"), ("p", "r")])
        two_white_one_black = BipartiteGraph(["q", "r"], ["p"], [("q", "p"), ("r", "p")])

        # Act & Assert
        assert find_induced(one_white_two_black, host) is None
        assert find_induced(two_white_one_black, host) is not None

    def test_six_cycle_in_twelve_cycle_is_absent(self):
        assert find_induced(even_cycle(3), even_cycle(6)) is None

    def test_mixed_kinds_raise(self):
        with pytest.raises(TypeError):
            find_induced(reflexive_path(2), Digraph(["a"], [("a", "a")]))


class TestIsInducedEmbedding(object):

    def test_rejects_non_injective_map(self):
        # Arrange
        host = reflexive_path(3)
        pattern = reflexive_path(2)
        embedding = Embedding([("p0", "p1"), ("p1", "p1")])

        # Act & Assert
        assert not is_induced_embedding(pattern, host, embedding)

    def test_rejects_non_induced_map(self):
        # Arrange
        host = reflexive_path(3)
        pattern = reflexive_path(2)
        embedding = Embedding([("p0", "p0"), ("p1", "p2")])

        # Act & Assert
        assert not is_induced_embedding(pattern, host, embedding)


def _random_digraph(rng, size, prefix):
    vertices = [f"{prefix}{index}" for index in range(size)]
    arcs = [(tail, head) for tail in vertices for head in vertices if rng.random() < 0.4]
    return Digraph(vertices, arcs, name=prefix)


def _has_induced_copy(pattern, host):
    for images in permutations(host.vertices, len(pattern)):
        mapping = dict(zip(pattern.vertices, images))
        if all(pattern.has_arc(tail, head) == host.has_arc(mapping[tail], mapping[head])
               for tail in pattern.vertices for head in pattern.vertices):
            return True

    return False


class TestFindInducedAgainstExhaustiveSearch(object):

    def test_random_digraphs(self):
        # Arrange
        rng = np.random.default_rng(13)
        found = 0

        for _ in range(300):
            pattern = _random_digraph(rng, int(rng.integers(1, 5)), "p")
            host = _random_digraph(rng, int(rng.integers(1, 8)), "h")

            # Act
            embedding = find_induced(pattern, host)

            # Assert
            assert (embedding is not None) == _has_induced_copy(pattern, host), f"{pattern} in {host}"
            if embedding is not None:
                assert is_induced_embedding(pattern, host, embedding)
                found += 1

        assert found > 0
