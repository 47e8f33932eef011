import pytest
from itertools import permutations
from reflexive_minhom.graphs.digraph import Digraph
from reflexive_minhom.graphs.constructions import as_symmetric_digraph
from reflexive_minhom.graphs.patterns import reflexive_path
from reflexive_minhom.orderings.ordering import Ordering, is_min_max
from reflexive_minhom.oracle.enumeration import enumerate_reflexive_digraphs
from reflexive_minhom.solver.band_profile import band_profile, BandViolation
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException


class TestBandProfile(object):

    def test_path_profile(self):
        # Arrange
        path = as_symmetric_digraph(reflexive_path(3))

        # Act
        profile = band_profile(path, Ordering(["p0", "p1", "p2"]))

        # Assert
        assert profile.lo == (1, 1, 2)
        assert profile.hi == (2, 3, 3)
        assert profile.psi == (1, 1, 2)
        assert profile.size == 3
        assert profile.related(1, 2)
        assert not profile.related(1, 3)

    def test_transitive_tournament_profile(self):
        # Arrange
        digraph = Digraph(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("a", "c")])

        # Act
        profile = band_profile(digraph, Ordering(["a", "b", "c"]))

        # Assert
        assert profile.lo == (1, 2, 3)
        assert profile.hi == (3, 3, 3)
        assert profile.psi == (1, 1, 1)

    def test_gap_in_row_raises(self):
        # Arrange
        path = as_symmetric_digraph(reflexive_path(3))

        # Act & Assert
        with pytest.raises(BandViolation) as violation:
            band_profile(path, Ordering(["p0", "p2", "p1"]))

        assert violation.value.witness == ("p0", "p2")

    def test_decreasing_rows_raise(self):
        # Arrange
        digraph = Digraph(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("a", "c"), ("b", "a")])

        # Act & Assert
        with pytest.raises(BandViolation) as violation:
            band_profile(digraph, Ordering(["a", "b", "c"]))

        assert violation.value.witness == ("a", "b")

    def test_non_reflexive_raises(self):
        with pytest.raises(NonReflexiveInputException):
            band_profile(Digraph(["a", "b"], [("a", "b")]), Ordering(["a", "b"]))

    def test_profile_exists_exactly_for_min_max_orderings(self):
        for size in range(1, 5):
            for digraph in enumerate_reflexive_digraphs(size):
                for sequence in permutations(digraph.vertices):
                    # Arrange
                    ordering = Ordering(sequence)

                    # Act
                    try:
                        band_profile(digraph, ordering)
                        has_profile = True
                    except BandViolation:
                        has_profile = False

                    # Assert
                    assert has_profile == is_min_max(digraph, ordering), f"{digraph} {ordering}"
