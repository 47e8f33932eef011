import pytest
from reflexive_minhom.graphs.digraph import Digraph
from reflexive_minhom.oracle.enumeration import enumerate_reflexive_digraphs, encode, decode, canonical_form, \
    EnumerationSizeException, MAX_ENUMERATION_SIZE
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException


def _reflexive(vertices, arcs, name="h"):
    return Digraph(vertices, [(vertex, vertex) for vertex in vertices] + arcs, name=name)


class TestEnumeration(object):

    @pytest.mark.parametrize("size, expected_classes", [(1, 1), (2, 3), (3, 16), (4, 218)])
    def test_class_counts(self, size, expected_classes):
        """
        The number of reflexive digraphs on n unlabeled vertices: 1, 3, 16, 218.
        """
        # Act
        classes = enumerate_reflexive_digraphs(size)

        # Assert
        assert len(classes) == expected_classes

    def test_representatives_are_canonical_and_distinct(self):
        # Act
        digraphs = list(enumerate_reflexive_digraphs(3))

        # Assert
        forms = [canonical_form(digraph) for digraph in digraphs]
        assert len(set(forms)) == len(forms)
        assert all(form == (3, encode(digraph)) for form, digraph in zip(forms, digraphs))
        assert all(digraph.is_reflexive() for digraph in digraphs)

    def test_encoding_bit_order(self):
        # Arrange
        forward = _reflexive(["a", "b"], [("a", "b")])

        # Act
        code = encode(forward)

        # Assert
        assert code == 0b10
        assert decode(2, code) == forward

    def test_isomorphic_digraphs_share_canonical_form(self):
        # Arrange
        forward = _reflexive(["a", "b"], [("a", "b")])
        backward = _reflexive(["a", "b"], [("b", "a")])

        # Act & Assert
        assert canonical_form(forward) == canonical_form(backward) == (2, 1)
        assert decode(*canonical_form(forward)) == backward

    def test_non_isomorphic_digraphs_differ_in_canonical_form(self):
        # Arrange
        path = _reflexive(["a", "b", "c"], [("a", "b"), ("b", "c")])
        reversed_path = _reflexive(["x", "y", "z"], [("z", "y"), ("y", "x")])
        transitive = _reflexive(["x", "y", "z"], [("x", "y"), ("y", "z"), ("x", "z")])

        # Act & Assert
        assert canonical_form(path) == canonical_form(reversed_path)
        assert canonical_form(path) != canonical_form(transitive)

    def test_non_reflexive_encoding_raises(self):
        with pytest.raises(NonReflexiveInputException):
            encode(Digraph(["a"], []))

    def test_size_out_of_range_raises(self):
        with pytest.raises(EnumerationSizeException):
            enumerate_reflexive_digraphs(0)

        with pytest.raises(EnumerationSizeException):
            enumerate_reflexive_digraphs(MAX_ENUMERATION_SIZE + 1)
