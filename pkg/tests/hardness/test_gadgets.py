import pytest
from itertools import combinations
from reflexive_minhom.hardness.gadgets import gadget, labeled_template, forward_mapping, check_reduction, \
    verify_reduction, verify_forward_mapping, intermediate_name, ReductionCheck, GADGET_RULES, \
    UnknownObstructionException, UnlabeledCatalogException, GadgetNameClashException
from reflexive_minhom.hardness.labeling import GADGET_OBSTRUCTIONS
from reflexive_minhom.hardness.labeling_tables import GADGET_TABLES, GADGET_LABELS
from reflexive_minhom.hardness.three_colored_graph import ThreeColoredGraph
from reflexive_minhom.recognition.catalog import default_catalog


def _independent_sets(colored_graph):
    for size in range(len(colored_graph) + 1):
        for subset in combinations(colored_graph.vertices, size):
            if colored_graph.is_independent(subset):
                yield subset


@pytest.fixture
def single_edge():
    return ThreeColoredGraph.build({"U": ["u1"], "V": ["v1"]}, [("u1", "v1")])


@pytest.fixture
def triangle():
    return ThreeColoredGraph.build({"U": ["u1"], "V": ["v1"], "W": ["w1"]},
                                   [("u1", "v1"), ("v1", "w1"), ("u1", "w1")])


@pytest.fixture
def mixed_graph():
    return ThreeColoredGraph.build({"U": ["u1", "u2"], "V": ["v1", "v2"], "W": ["w1"]},
                                   [("u1", "v1"), ("v1", "w1"), ("u2", "w1"), ("u2", "v2"), ("w1", "v2")])


class TestLabeledTemplate(object):

    @pytest.mark.parametrize("obstruction", GADGET_OBSTRUCTIONS)
    def test_template_satisfies_gadget_table(self, obstruction):
        # Act
        template = labeled_template(obstruction)

        # Assert
        assert template.vertices == GADGET_LABELS
        assert template.name == f"H{obstruction}"
        assert template.is_reflexive()
        assert GADGET_TABLES[obstruction].holds(template, {label: label for label in GADGET_LABELS})

    def test_unknown_obstruction_raises(self):
        with pytest.raises(UnknownObstructionException):
            labeled_template(1)

        with pytest.raises(UnknownObstructionException):
            labeled_template(7)

    def test_unidentified_catalog_raises(self):
        with pytest.raises(UnlabeledCatalogException):
            labeled_template(2, default_catalog())


class TestGadget(object):

    def test_single_edge_for_h2(self, single_edge):
        # Act
        instance = gadget(2, single_edge, 1)

        # Assert
        assert instance.instance.name == "x_H2"
        assert instance.instance.arcs == (("u1", "v1"),)
        assert instance.intermediates == []
        assert instance.budget == 1
        assert [instance.costs.cost("u1", label) for label in GADGET_LABELS] == [0, 1, 2, 2]
        assert [instance.costs.cost("v1", label) for label in GADGET_LABELS] == [2, 1, 2, 0]
        assert instance.provenance == {"u1": "vertex u1 of class U", "v1": "vertex v1 of class V"}

    def test_path_rule_adds_penalised_intermediate(self):
        # Arrange
        colored_graph = ThreeColoredGraph.build({"U": ["u1"], "W": ["w1"]}, [("u1", "w1")])

        # Act
        instance = gadget(4, colored_graph, 0)

        # Assert
        middle = intermediate_name("u1", "w1")
        assert middle == "m_u1_w1"
        assert instance.intermediates == [middle]
        assert set(instance.instance.arcs) == {("u1", middle), (middle, "w1")}
        assert [instance.costs.cost(middle, label) for label in GADGET_LABELS] == [0, 0, 2, 2]
        assert instance.provenance[middle] == "intermediate of edge u1-w1"

    def test_fork_rule_points_both_ends_at_intermediate(self):
        # Arrange
        colored_graph = ThreeColoredGraph.build({"U": ["u1"], "W": ["w1"]}, [("u1", "w1")])

        # Act
        instance = gadget(5, colored_graph, 0)

        # Assert
        assert set(instance.instance.arcs) == {("u1", "m_u1_w1"), ("w1", "m_u1_w1")}

    @pytest.mark.parametrize("obstruction, expected", [(2, 0), (3, 0), (4, 2), (5, 2), (6, 1)])
    def test_intermediate_counts_on_triangle(self, triangle, obstruction, expected):
        # Act
        instance = gadget(obstruction, triangle, 1)

        # Assert
        assert len(instance.intermediates) == expected
        assert len(instance.instance) == 3 + expected

    def test_name_clash_raises(self):
        # Arrange
        colored_graph = ThreeColoredGraph.build({"U": ["u1"], "V": ["m_u1_w1"], "W": ["w1"]}, [("u1", "w1")])

        # Act & Assert
        with pytest.raises(GadgetNameClashException):
            gadget(4, colored_graph, 0)

    def test_empty_graph(self):
        # Arrange
        empty = ThreeColoredGraph.build({}, [])

        # Act
        check = check_reduction(2, empty, 0)

        # Assert
        assert len(gadget(2, empty, 0).instance) == 0
        assert check.min_cost == 0
        assert check.holds


class TestForwardMapping(object):

    @pytest.mark.parametrize("obstruction", GADGET_OBSTRUCTIONS)
    def test_every_independent_set_maps_at_its_cost(self, mixed_graph, obstruction):
        """
        The forward map of an independent set I is a homomorphism of cost |V(X)| - |I|.
        """
        for independent_set in _independent_sets(mixed_graph):
            # Act
            valid, cost = verify_forward_mapping(obstruction, mixed_graph, independent_set)

            # Assert
            assert valid, f"forward map of {independent_set} is not a homomorphism"
            assert cost == len(mixed_graph) - len(independent_set)

    def test_zero_and_one_labels(self, single_edge):
        # Act
        assignment = forward_mapping(2, single_edge, ["u1"])

        # Assert
        assert assignment == {"u1": GADGET_RULES[2].zero_labels["U"], "v1": GADGET_RULES[2].one_labels["V"]}


class TestCheckReduction(object):

    @pytest.mark.parametrize("obstruction", GADGET_OBSTRUCTIONS)
    def test_minimum_cost_is_sharp(self, mixed_graph, obstruction):
        """
        min cost = |V(X)| - alpha(X), so the decision answer agrees for every k.
        """
        for k in range(len(mixed_graph) + 2):
            # Act
            check = check_reduction(obstruction, mixed_graph, k)

            # Assert
            assert check.sharp
            assert check.decision_agrees
            assert check.independence_number == 2

    @pytest.mark.parametrize("obstruction", GADGET_OBSTRUCTIONS)
    def test_triangle(self, triangle, obstruction):
        assert verify_reduction(obstruction, triangle, 1)

    def test_reduction_check_properties(self):
        # Act
        agreeing = ReductionCheck(2, k=2, independence_number=1, min_cost=2, budget=1)
        disagreeing = ReductionCheck(2, k=1, independence_number=1, min_cost=2, budget=1)

        # Assert
        assert agreeing.sharp
        assert agreeing.decision_agrees
        assert agreeing.holds
        assert not disagreeing.sharp
        assert not disagreeing.decision_agrees
        assert not disagreeing.holds
