import pytest
from fractions import Fraction
from reflexive_minhom.graphs.digraph import Digraph, UnknownVertexException
from reflexive_minhom.solver.costs import CostMatrix, Homomorphism, to_fraction, verify_homomorphism, \
    InvalidCostException, MissingCostException, IncompleteAssignmentException


class TestCostMatrix(object):

    def test_to_fraction_is_exact(self):
        # Act & Assert
        assert to_fraction(3) == Fraction(3)
        assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)

    def test_to_fraction_refuses_floats_and_bools(self):
        with pytest.raises(InvalidCostException):
            to_fraction(0.5)

        with pytest.raises(InvalidCostException):
            to_fraction(True)

    def test_from_rows(self):
        # Act
        costs = CostMatrix.from_rows(["g0", "g1"], ["a", "b"], [[1, Fraction(1, 2)], [0, 7]])

        # Assert
        assert costs.cost("g0", "b") == Fraction(1, 2)
        assert costs.row("g1") == [0, 7]
        assert costs.instance_vertices == ("g0", "g1")
        assert costs.template_vertices == ("a", "b")

    def test_short_row_raises(self):
        with pytest.raises(MissingCostException):
            CostMatrix.from_rows(["g0"], ["a", "b"], [[1]])

    def test_missing_entry_raises(self):
        with pytest.raises(MissingCostException):
            CostMatrix(["g0"], ["a", "b"], {("g0", "a"): 1})

    def test_unknown_pair_raises(self):
        with pytest.raises(InvalidCostException):
            CostMatrix(["g0"], ["a"], {("g0", "a"): 1, ("g9", "a"): 1})

    def test_check_matches(self):
        # Arrange
        costs = CostMatrix.uniform(["g0"], ["a"])
        template = Digraph(["a"], [("a", "a")])

        # Act & Assert
        costs.check_matches(Digraph(["g0"], []), template)
        with pytest.raises(MissingCostException):
            costs.check_matches(Digraph(["g0", "g1"], []), template)
        with pytest.raises(MissingCostException):
            costs.check_matches(Digraph(["g0"], []), Digraph(["b"], []))


class TestVerifyHomomorphism(object):

    @pytest.fixture
    def setup(self):
        template = Digraph(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b")])
        instance = Digraph(["g0", "g1"], [("g0", "g1")])
        costs = CostMatrix.from_rows(["g0", "g1"], ["a", "b"], [[1, 2], [Fraction(1, 3), 4]])
        return template, instance, costs

    def test_valid_assignment_and_cost(self, setup):
        # Arrange
        template, instance, costs = setup

        # Act
        valid, cost = verify_homomorphism(instance, template, {"g0": "a", "g1": "b"}, costs)

        # Assert
        assert valid
        assert cost == 5

    def test_cost_reported_for_invalid_assignment(self, setup):
        # Arrange
        template, instance, costs = setup

        # Act
        valid, cost = verify_homomorphism(instance, template, {"g0": "b", "g1": "a"}, costs)

        # Assert
        assert not valid
        assert cost == Fraction(7, 3)

    def test_unmapped_vertex_raises(self, setup):
        # Arrange
        template, instance, costs = setup

        # Act & Assert
        with pytest.raises(IncompleteAssignmentException):
            verify_homomorphism(instance, template, {"g0": "a"}, costs)

    def test_unknown_image_raises(self, setup):
        # Arrange
        template, instance, costs = setup

        # Act & Assert
        with pytest.raises(UnknownVertexException):
            verify_homomorphism(instance, template, {"g0": "a", "g1": "z"}, costs)

    def test_homomorphism_cost_is_fraction(self):
        # Act
        homomorphism = Homomorphism({"g0": "a"}, 2)

        # Assert
        assert homomorphism.cost == Fraction(2)
        assert homomorphism.image("g0") == "a"
