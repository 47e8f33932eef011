import pytest
from reflexive_minhom.graphs.digraph import Digraph
from reflexive_minhom.hardness.labeling import identify_obstructions, identify_labeled_obstructions, \
    matching_labeling, satisfying_labelings, obstruction_name, converse_name, NoMatchingObstruction, \
    OBSTRUCTIONS, GADGET_OBSTRUCTIONS, _eliminate
from reflexive_minhom.hardness.labeling_tables import ArcTable, InconsistentArcTableException, STRUCTURAL_TABLES, \
    GADGET_TABLES, WITNESS_LABELINGS, PROOF_LABELS_3, GADGET_LABELS
from reflexive_minhom.oracle.enumeration import canonical_form
from reflexive_minhom.recognition.catalog import default_catalog, derive_obstruction_catalog


@pytest.fixture(scope="module")
def identification():
    return identify_obstructions(default_catalog())


def _reflexive(vertices, arcs):
    return Digraph(vertices, [(vertex, vertex) for vertex in vertices] + arcs)


class TestArcTable(object):

    def test_split_reads_multi_character_labels(self):
        # Act
        table = ArcTable(GADGET_LABELS, required=["x1x2"], forbidden=["x4x3"], notes={})

        # Assert
        assert table.required == (("x1", "x2"),)
        assert table.forbidden == (("x4", "x3"),)

    def test_unknown_label_raises(self):
        with pytest.raises(ValueError):
            ArcTable(PROOF_LABELS_3, required=["uz"], forbidden=[], notes={})

    def test_arc_both_required_and_forbidden_raises(self):
        with pytest.raises(InconsistentArcTableException):
            ArcTable(PROOF_LABELS_3, required=["uv", "sv"], forbidden=["sv"], notes={})

    def test_holds(self):
        # Arrange
        smallest = _reflexive(["a", "b", "c"], [("a", "b"), ("b", "a"), ("c", "b"), ("a", "c")])

        # Act & Assert
        assert STRUCTURAL_TABLES[1].holds(smallest, {"u": "a", "v": "b", "s": "c"})
        assert not STRUCTURAL_TABLES[1].holds(smallest, {"u": "b", "v": "a", "s": "c"})


class TestMatchingLabeling(object):

    def test_smallest_obstruction_structural_labeling(self):
        # Arrange
        smallest = _reflexive(["u", "v", "s"], [("u", "v"), ("v", "u"), ("s", "v"), ("u", "s")])

        # Act
        labeling = matching_labeling(smallest, 1)

        # Assert
        assert labeling == {"u": "u", "v": "v", "s": "s"}

    def test_size_mismatch_gives_no_labeling(self):
        # Arrange
        smallest = _reflexive(["u", "v", "s"], [("u", "v"), ("v", "u"), ("s", "v"), ("u", "s")])

        # Act & Assert
        assert satisfying_labelings(smallest, GADGET_TABLES[2]) == []
        assert matching_labeling(smallest, 2) is None

    def test_four_arc_obstruction_cannot_carry_five_arc_table(self, identification):
        """
        H2 has four arcs besides its loops while the H4 gadget table requires five.
        """
        # Arrange
        member = identification.member(2)

        # Act & Assert
        assert member.digraph.num_arcs == 4 + 4
        assert satisfying_labelings(member.digraph, GADGET_TABLES[4]) == []
        assert matching_labeling(member.digraph, 4) is None


class TestIdentifyObstructions(object):

    def test_every_obstruction_gets_its_own_class(self, identification):
        # Act
        classes = [identification.classes[obstruction] for obstruction in OBSTRUCTIONS]

        # Assert
        assert len(set(classes)) == len(OBSTRUCTIONS)
        assert sorted(classes) == sorted(members[0] for members in default_catalog().converse_classes)

    def test_members_are_named(self, identification):
        # Act & Assert
        for obstruction in OBSTRUCTIONS:
            assert identification.member(obstruction).name == obstruction_name(obstruction)

        assert identification.member(1).size == 3
        assert identification.member(1).labeling is None

    def test_converse_partners_are_named(self, identification):
        # Act
        names = [member.name for member in identification.catalog]

        # Assert
        for member in identification.catalog:
            if member.index in identification.members.values():
                continue
            assert member.name in [converse_name(obstruction) for obstruction in OBSTRUCTIONS]
        assert len(set(names)) == len(names)

    def test_gadget_labelings_pass_both_tables(self, identification):
        """
        The attached labeling validates the gadget table, and read through the witness labeling it validates the
        structural table as well.
        """
        for obstruction in GADGET_OBSTRUCTIONS:
            # Arrange
            member = identification.member(obstruction)
            witness = WITNESS_LABELINGS[obstruction]

            # Act
            structural_labeling = {witness[label]: vertex for label, vertex in member.labeling.items()}

            # Assert
            assert GADGET_TABLES[obstruction].holds(member.digraph, member.labeling)
            assert STRUCTURAL_TABLES[obstruction].holds(member.digraph, structural_labeling)
            assert member.labeling in identification.gadget_labelings[obstruction]

    def test_shared_gadget_members_are_not_isomorphic(self, identification):
        # Act & Assert
        assert canonical_form(identification.member(2).digraph) != canonical_form(identification.member(3).digraph)
        assert identification.classes[2] != identification.classes[3]

    def test_labeled_catalog(self):
        # Act
        catalog = identify_labeled_obstructions(default_catalog())

        # Assert
        assert sorted(catalog.by_name(obstruction_name(2)).labeling) == list(GADGET_LABELS)

    def test_catalog_without_four_vertex_members_raises(self):
        with pytest.raises(NoMatchingObstruction):
            identify_obstructions(derive_obstruction_catalog(3))


class TestEliminate(object):

    def test_forced_assignments(self):
        # Arrange
        candidates = {1: {0}, 2: {1, 2}, 3: {2}, 4: {3}, 5: {4}, 6: {5}}

        # Act
        assigned, ambiguities = _eliminate(candidates)

        # Assert
        assert assigned == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5}
        assert ambiguities == []

    def test_ambiguity_takes_lowest_class(self):
        # Arrange
        candidates = {1: {0}, 2: {1, 2}, 3: {1, 2}, 4: {3}, 5: {4}, 6: {5}}

        # Act
        assigned, ambiguities = _eliminate(candidates)

        # Assert
        assert assigned[2] == 1
        assert assigned[3] == 2
        assert ambiguities == ["H2 matches classes [1, 2]; took 1"]

    def test_conflict_raises(self):
        # Arrange
        candidates = {1: {0}, 2: {0}, 3: {2}, 4: {3}, 5: {4}, 6: {5}}

        # Act & Assert
        with pytest.raises(NoMatchingObstruction):
            _eliminate(candidates)
