"""
The obstruction catalog: reflexive digraphs, up to isomorphism, whose symmetric subgraph is proper interval and whose
bipartite double is a proper interval bigraph, yet which have no Min-Max ordering, while every vertex-deleted
subgraph has one. Members are grouped into classes closed under taking the converse.
"""
import logging
import os
from functools import lru_cache
from reflexive_minhom.formats.digraph_format import serialize_digraph, load_digraph
from reflexive_minhom.graphs.constructions import symmetric_subgraph, bipartite_double, converse, induced_subgraph, \
    as_symmetric_digraph
from reflexive_minhom.oracle.enumeration import enumerate_reflexive_digraphs, canonical_form, decode, \
    MAX_ENUMERATION_SIZE
from reflexive_minhom.orderings.search import find_min_max_bruteforce, find_bipartite_min_max

logger = logging.getLogger(__name__)

INDEX_FILE = "index.txt"
DEFAULT_CATALOG_SIZE = 4


class CatalogSizeException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class CatalogFormatException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class CatalogMember(object):
    """
    name starts as "obstruction_<index>" and is replaced once the hardness labeling identifies the member.
    labeling maps x1..x4 to the member's vertices when known.
    """

    def __init__(self, index, digraph, code, converse_class, name=None, labeling=None):
        self.index = index
        self.digraph = digraph
        self.code = code
        self.converse_class = converse_class
        self.name = name or f"obstruction_{index}"
        self.labeling = dict(labeling) if labeling is not None else None

    @property
    def size(self):
        return len(self.digraph)

    def file_name(self):
        return f"member_{self.index:02d}.digraph"

    def __repr__(self):
        return f"CatalogMember({self.index}: {self.name}, {self.digraph})"


class ObstructionCatalog(object):
    def __init__(self, max_size, members):
        self.max_size = max_size
        self.members = tuple(members)

    @property
    def converse_classes(self):
        """
        Lists of member indices, one per converse class, in order of their first member.
        """
        classes = {}
        for member in self.members:
            classes.setdefault(member.converse_class, []).append(member.index)
        return [classes[key] for key in sorted(classes)]

    def member(self, index):
        return next(member for member in self.members if member.index == index)

    def by_name(self, name):
        for member in self.members:
            if member.name == name:
                return member
        raise KeyError(f"No catalog member named {name}")

    def without_class(self, converse_class):
        """
        The same catalog minus one converse class, used as a negative control.
        """
        return ObstructionCatalog(self.max_size, [member for member in self.members
                                                  if member.converse_class != converse_class])

    def with_identification(self, names, labelings):
        """
        A copy with members renamed and labeled: names and labelings are dicts keyed by member index.
        """
        members = [CatalogMember(member.index, member.digraph, member.code, member.converse_class,
                                 name=names.get(member.index, member.name),
                                 labeling=labelings.get(member.index, member.labeling)) for member in self.members]
        return ObstructionCatalog(self.max_size, members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def has_proper_interval_symmetric_part(digraph, limit_template_size=None):
    return find_min_max_bruteforce(as_symmetric_digraph(symmetric_subgraph(digraph)), limit_template_size) is not None


def has_proper_interval_bigraph_double(digraph, limit_template_size=None):
    return find_bipartite_min_max(bipartite_double(digraph), limit_template_size) is not None


def is_minimal_obstruction(digraph):
    """
    No Min-Max ordering, while deleting any single vertex leaves a digraph that has one.
    """
    if find_min_max_bruteforce(digraph, None) is not None:
        return False

    for vertex in digraph.vertices:
        remaining = induced_subgraph(digraph, [other for other in digraph.vertices if other != vertex])
        if find_min_max_bruteforce(remaining, None) is None:
            return False

    return True


def derive_obstruction_catalog(max_size=DEFAULT_CATALOG_SIZE, processes=1):
    if max_size < 1 or max_size > MAX_ENUMERATION_SIZE:
        raise CatalogSizeException(f"Catalog derivation supports sizes 1 to {MAX_ENUMERATION_SIZE}, got {max_size}")

    kept = []
    for size in range(1, max_size + 1):
        classes = enumerate_reflexive_digraphs(size, processes)
        logger.info(f"Checking {len(classes)} classes of reflexive digraphs on {size} vertices")

        for code, digraph in zip(classes.codes, classes):
            if is_minimal_obstruction(digraph) and has_proper_interval_symmetric_part(digraph) and \
                    has_proper_interval_bigraph_double(digraph):
                kept.append((size, code))
                if size > DEFAULT_CATALOG_SIZE:
                    logger.warning(f"Minimal obstruction on {size} vertices found: {digraph}")

    kept.sort()
    position_of = {key: position for position, key in enumerate(kept)}
    members = []

    for index, (size, code) in enumerate(kept):
        digraph = decode(size, code, name=f"obstruction_{index}")
        converse_key = canonical_form(converse(digraph))

        if converse_key not in position_of:
            # Minimality, S(H) and B(H) are all preserved by taking the converse
            raise CatalogFormatException(f"Converse of {digraph} is missing from the catalog")

        converse_class = min(index, position_of[converse_key])
        members.append(CatalogMember(index, digraph, code, converse_class))

    catalog = ObstructionCatalog(max_size, members)
    logger.info(f"Obstruction catalog up to {max_size} vertices: {len(catalog)} members, "
                f"{len(catalog.converse_classes)} converse classes")
    return catalog


@lru_cache(maxsize=None)
def default_catalog(max_size=DEFAULT_CATALOG_SIZE):
    return derive_obstruction_catalog(max_size)


def _format_labeling(labeling):
    if labeling is None:
        return "-"
    return ",".join(f"{label}={vertex}" for label, vertex in sorted(labeling.items()))


def _parse_labeling(text):
    if text == "-":
        return None
    return dict(entry.split("=", 1) for entry in text.split(","))


def write_catalog(catalog, directory):
    """
    One digraph file per member plus index.txt, one line per member:
    "<file> index=<i> class=<c> size=<n> code=<code> name=<name> labels=<x1=a,...|->".
    """
    os.makedirs(directory, exist_ok=True)
    index_lines = [f"max_size={catalog.max_size}"]

    for member in catalog.members:
        with open(os.path.join(directory, member.file_name()), "w") as member_file:
            member_file.write(serialize_digraph(member.digraph))

        index_lines.append(f"{member.file_name()} index={member.index} class={member.converse_class} "
                           f"size={member.size} code={member.code} name={member.name} "
                           f"labels={_format_labeling(member.labeling)}")

    with open(os.path.join(directory, INDEX_FILE), "w") as index_file:
        index_file.write("\n".join(index_lines) + "\n")


def load_catalog(directory):
    index_path = os.path.join(directory, INDEX_FILE)
    if not os.path.exists(index_path):
        raise CatalogFormatException(f"No {INDEX_FILE} in {directory}")

    with open(index_path, "r") as index_file:
        lines = [line.strip() for line in index_file if line.strip() != ""]

    if len(lines) == 0 or not lines[0].startswith("max_size="):
        raise CatalogFormatException(f"{index_path} does not start with a max_size line")

    max_size = int(lines[0].split("=", 1)[1])
    members = []

    for line in lines[1:]:
        file_name, *fields = line.split(" ")
        try:
            values = dict(field.split("=", 1) for field in fields)
            members.append(CatalogMember(int(values["index"]), load_digraph(os.path.join(directory, file_name)),
                                         int(values["code"]), int(values["class"]), name=values["name"],
                                         labeling=_parse_labeling(values["labels"])))
        except (KeyError, ValueError) as e:
            raise CatalogFormatException(f"Malformed catalog index line '{line}': {e}")

    return ObstructionCatalog(max_size, members)
