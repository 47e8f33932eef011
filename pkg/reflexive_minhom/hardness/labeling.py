"""
Naming the derived obstructions. The catalog only knows its members by index; the hardness gadgets need to know
which member is H2, ..., H6 and which of its vertices play x1..x4.
"""
import itertools
import logging
from reflexive_minhom.hardness.labeling_tables import STRUCTURAL_TABLES, GADGET_TABLES, WITNESS_LABELINGS

logger = logging.getLogger(__name__)

OBSTRUCTIONS = (1, 2, 3, 4, 5, 6)
GADGET_OBSTRUCTIONS = (2, 3, 4, 5, 6)


class NoMatchingObstruction(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def obstruction_name(obstruction):
    return f"H{obstruction}"


def converse_name(obstruction):
    return f"H{obstruction}_converse"


def satisfying_labelings(digraph, table):
    """
    Every injective labeling of the digraph's vertices by the table's labels under which the table holds, in
    lexicographic order of the vertex tuples.
    """
    if len(digraph) != len(table.labels):
        return []

    labelings = []
    for images in itertools.permutations(digraph.vertices):
        labeling = dict(zip(table.labels, images))
        if table.holds(digraph, labeling):
            labelings.append(labeling)
    return labelings


def matching_labeling(digraph, obstruction):
    """
    The first gadget labeling of the digraph that also reproduces the obstruction's structural pattern, or None.
    For H1 there is no gadget, so the structural labeling is returned.
    """
    structural = STRUCTURAL_TABLES[obstruction]

    if obstruction not in GADGET_TABLES:
        labelings = satisfying_labelings(digraph, structural)
        return labelings[0] if len(labelings) > 0 else None

    witness = WITNESS_LABELINGS[obstruction]
    for labeling in satisfying_labelings(digraph, GADGET_TABLES[obstruction]):
        if structural.holds(digraph, {witness[label]: vertex for label, vertex in labeling.items()}):
            return labeling
    return None


class Identification(object):
    """
    classes maps an obstruction number to its converse class in the catalog, members to the member carrying its
    name, gadget_labelings to every x1..x4 labeling of that member that validates its gadget table.
    """

    def __init__(self, catalog, classes, members, gadget_labelings, ambiguities):
        self.catalog = catalog
        self.classes = dict(classes)
        self.members = dict(members)
        self.gadget_labelings = dict(gadget_labelings)
        self.ambiguities = list(ambiguities)

    def member(self, obstruction):
        return self.catalog.member(self.members[obstruction])


def _eliminate(candidates):
    assigned = {}
    ambiguities = []

    while len(assigned) < len(candidates):
        progress = True
        while progress:
            progress = False
            taken = set(assigned.values())
            for obstruction in OBSTRUCTIONS:
                if obstruction in assigned:
                    continue

                remaining = candidates[obstruction] - taken
                if len(remaining) == 0:
                    raise NoMatchingObstruction(f"Every catalog class matching {obstruction_name(obstruction)} is "
                                                f"already taken by another obstruction")
                if len(remaining) == 1:
                    assigned[obstruction] = next(iter(remaining))
                    taken.add(assigned[obstruction])
                    progress = True

        open_obstructions = [obstruction for obstruction in OBSTRUCTIONS if obstruction not in assigned]
        if len(open_obstructions) > 0:
            obstruction = open_obstructions[0]
            remaining = sorted(candidates[obstruction] - set(assigned.values()))
            ambiguities.append(f"{obstruction_name(obstruction)} matches classes {remaining}; took {remaining[0]}")
            logger.warning(ambiguities[-1])
            assigned[obstruction] = remaining[0]

    return assigned, ambiguities


def identify_obstructions(catalog):
    matches = {obstruction: {} for obstruction in OBSTRUCTIONS}

    for member in catalog.members:
        for obstruction in OBSTRUCTIONS:
            if member.size != (3 if obstruction == 1 else 4):
                continue
            labeling = matching_labeling(member.digraph, obstruction)
            if labeling is not None:
                matches[obstruction].setdefault(member.converse_class, (member.index, labeling))

    for obstruction in OBSTRUCTIONS:
        if len(matches[obstruction]) == 0:
            raise NoMatchingObstruction(f"No member of the catalog up to {catalog.max_size} vertices matches "
                                        f"{obstruction_name(obstruction)}")

    candidates = {obstruction: set(matches[obstruction]) for obstruction in OBSTRUCTIONS}
    classes, ambiguities = _eliminate(candidates)

    members = {obstruction: matches[obstruction][classes[obstruction]][0] for obstruction in OBSTRUCTIONS}
    gadget_labelings = {obstruction: satisfying_labelings(catalog.member(members[obstruction]).digraph,
                                                          GADGET_TABLES[obstruction])
                        for obstruction in GADGET_OBSTRUCTIONS}

    names = {}
    labelings = {}
    for obstruction in OBSTRUCTIONS:
        for member in catalog.members:
            if member.converse_class == classes[obstruction] and member.index != members[obstruction]:
                names[member.index] = converse_name(obstruction)

        index = members[obstruction]
        names[index] = obstruction_name(obstruction)
        if obstruction in GADGET_OBSTRUCTIONS:
            labelings[index] = matches[obstruction][classes[obstruction]][1]
        logger.debug(f"{obstruction_name(obstruction)} is catalog member {index}")

    return Identification(catalog.with_identification(names, labelings), classes, members, gadget_labelings,
                          ambiguities)


def identify_labeled_obstructions(catalog):
    """
    The catalog with H1..H6 named (converse partners get the "_converse" suffix) and x1..x4 labelings attached
    to H2..H6.
    """
    return identify_obstructions(catalog).catalog
