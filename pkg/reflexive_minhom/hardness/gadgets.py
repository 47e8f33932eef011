"""
Reductions from independent set on three-coloured graphs to MinHOM(H_i), i = 2..6.

Each vertex of X keeps its name in the gadget digraph G and has two cheap images: a "zero" label, cost 0, which
stands for being in the independent set, and a "one" label, cost 1. Every other image costs |V(X)|. Some edges are
replaced by a path or a fork through an intermediate vertex m_<a>_<b>, which is free everywhere except on its
penalised labels. G then has a homomorphism of cost |V(X)| - k exactly when X has an independent set of size k.
"""
import logging
from functools import lru_cache
from reflexive_minhom.graphs.digraph import Digraph
from reflexive_minhom.hardness.labeling import identify_labeled_obstructions, obstruction_name, \
    GADGET_OBSTRUCTIONS
from reflexive_minhom.hardness.labeling_tables import GADGET_LABELS
from reflexive_minhom.oracle.bruteforce import minhom_bruteforce, max_independent_set, DEFAULT_NODE_BUDGET, \
    DEFAULT_INDEPENDENT_SET_BUDGET
from reflexive_minhom.recognition.catalog import default_catalog
from reflexive_minhom.solver.costs import CostMatrix, verify_homomorphism

logger = logging.getLogger(__name__)

ARC = "arc"
PATH = "path"
FORK = "fork"


class UnknownObstructionException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class UnlabeledCatalogException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class GadgetNameClashException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class EdgeRule(object):
    """
    How an X edge between two colour classes becomes part of G. tail and head are the colours of the X endpoints:
      arc:  tail -> head
      path: tail -> m -> head
      fork: tail -> m <- head
    For path and fork, m's image is chosen from the image of the endpoint with colour key_color through
    intermediate_image, and m pays |V(X)| on the labels in penalised.
    """

    def __init__(self, kind, tail, head, key_color=None, intermediate_image=None, penalised=()):
        self.kind = kind
        self.tail = tail
        self.head = head
        self.key_color = key_color
        self.intermediate_image = dict(intermediate_image) if intermediate_image is not None else None
        self.penalised = tuple(penalised)

    @property
    def has_intermediate(self):
        return self.kind != ARC


class GadgetRules(object):
    def __init__(self, zero_labels, one_labels, edge_rules):
        self.zero_labels = dict(zero_labels)
        self.one_labels = dict(one_labels)
        self.edge_rules = tuple(edge_rules)


_TWO_LABEL_RULES = GadgetRules(zero_labels={"U": "x1", "V": "x4", "W": "x3"},
                               one_labels={"U": "x2", "V": "x2", "W": "x2"},
                               edge_rules=[EdgeRule(ARC, "U", "V"),
                                           EdgeRule(ARC, "U", "W"),
                                           EdgeRule(ARC, "W", "V")])

GADGET_RULES = {
    2: _TWO_LABEL_RULES,
    3: _TWO_LABEL_RULES,
    4: GadgetRules(zero_labels={"U": "x3", "V": "x2", "W": "x4"},
                   one_labels={"U": "x1", "V": "x3", "W": "x1"},
                   edge_rules=[EdgeRule(ARC, "V", "U"),
                               EdgeRule(PATH, "U", "W", key_color="U", intermediate_image={"x1": "x2", "x3": "x1"},
                                        penalised=("x3", "x4")),
                               EdgeRule(PATH, "V", "W", key_color="W", intermediate_image={"x4": "x3", "x1": "x1"},
                                        penalised=("x2", "x4"))]),
    5: GadgetRules(zero_labels={"U": "x2", "V": "x4", "W": "x1"},
                   one_labels={"U": "x1", "V": "x2", "W": "x3"},
                   edge_rules=[EdgeRule(ARC, "U", "V"),
                               EdgeRule(FORK, "U", "W", key_color="U", intermediate_image={"x2": "x3", "x1": "x4"},
                                        penalised=("x1", "x2")),
                               EdgeRule(PATH, "W", "V", key_color="W", intermediate_image={"x3": "x3", "x1": "x2"},
                                        penalised=("x1", "x4"))]),
    6: GadgetRules(zero_labels={"U": "x1", "V": "x3", "W": "x4"},
                   one_labels={"U": "x2", "V": "x1", "W": "x3"},
                   edge_rules=[EdgeRule(ARC, "U", "V"),
                               EdgeRule(PATH, "U", "W", key_color="U", intermediate_image={"x2": "x3", "x1": "x2"},
                                        penalised=("x1", "x4")),
                               EdgeRule(ARC, "W", "V")]),
}


def intermediate_name(tail, head):
    return f"m_{tail}_{head}"


class GadgetInstance(object):
    """
    template is the labeled obstruction with its vertices renamed x1..x4; provenance maps every vertex of the
    instance to a line describing where it comes from in X.
    """

    def __init__(self, obstruction, colored_graph, k, template, instance, costs, provenance):
        self.obstruction = obstruction
        self.colored_graph = colored_graph
        self.k = k
        self.template = template
        self.instance = instance
        self.costs = costs
        self.provenance = dict(provenance)

    @property
    def budget(self):
        return len(self.colored_graph) - self.k

    @property
    def intermediates(self):
        return [vertex for vertex in self.instance.vertices if not self.colored_graph.graph.has_vertex(vertex)]


@lru_cache(maxsize=None)
def default_labeled_catalog():
    return identify_labeled_obstructions(default_catalog())


def _check_obstruction(obstruction):
    if obstruction not in GADGET_OBSTRUCTIONS:
        raise UnknownObstructionException(f"Gadgets exist for obstructions {list(GADGET_OBSTRUCTIONS)}, "
                                          f"got {obstruction}")


def labeled_template(obstruction, catalog=None):
    """
    The obstruction as a digraph on x1..x4.
    """
    _check_obstruction(obstruction)
    catalog = catalog if catalog is not None else default_labeled_catalog()

    try:
        member = catalog.by_name(obstruction_name(obstruction))
    except KeyError:
        raise UnlabeledCatalogException(f"The catalog has no member named {obstruction_name(obstruction)}; "
                                        f"identify its obstructions first")

    if member.labeling is None:
        raise UnlabeledCatalogException(f"Catalog member {member.name} carries no x1..x4 labeling")

    label_of = {vertex: label for label, vertex in member.labeling.items()}
    arcs = [(label_of[tail], label_of[head]) for tail, head in member.digraph.arcs]
    return Digraph(GADGET_LABELS, sorted(arcs), name=obstruction_name(obstruction))


def _endpoints(rule, first, second):
    # first has colour rule.tail, second has colour rule.head
    return {rule.tail: first, rule.head: second}


def gadget(obstruction, colored_graph, k, catalog=None):
    template = labeled_template(obstruction, catalog)
    rules = GADGET_RULES[obstruction]
    size = len(colored_graph)

    vertices = list(colored_graph.vertices)
    arcs = []
    entries = {}
    provenance = {}

    for vertex in colored_graph.vertices:
        color = colored_graph.color_of(vertex)
        provenance[vertex] = f"vertex {vertex} of class {color}"
        for label in GADGET_LABELS:
            entries[(vertex, label)] = size
        entries[(vertex, rules.zero_labels[color])] = 0
        entries[(vertex, rules.one_labels[color])] = 1

    for rule in rules.edge_rules:
        for first, second in colored_graph.edges_between(rule.tail, rule.head):
            if rule.kind == ARC:
                arcs.append((first, second))
                continue

            middle = intermediate_name(first, second)
            if colored_graph.graph.has_vertex(middle) or middle in provenance:
                raise GadgetNameClashException(f"Intermediate vertex {middle} clashes with a vertex of "
                                               f"{colored_graph.name}")

            vertices.append(middle)
            provenance[middle] = f"intermediate of edge {first}-{second}"
            for label in GADGET_LABELS:
                entries[(middle, label)] = size if label in rule.penalised else 0

            if rule.kind == PATH:
                arcs.extend([(first, middle), (middle, second)])
            else:
                arcs.extend([(first, middle), (second, middle)])

    instance = Digraph(vertices, arcs, name=f"{colored_graph.name}_{obstruction_name(obstruction)}")
    costs = CostMatrix(vertices, GADGET_LABELS, entries)

    logger.debug(f"Gadget for {obstruction_name(obstruction)} from {colored_graph.name}: {len(instance)} vertices, "
                 f"{instance.num_arcs} arcs, budget {size - k}")
    return GadgetInstance(obstruction, colored_graph, k, template, instance, costs, provenance)


def forward_mapping(obstruction, colored_graph, independent_set):
    """
    The homomorphism the reduction pairs with an independent set: zero labels on the set, one labels elsewhere,
    intermediates placed from the image of their key endpoint. Its cost is |V(X)| - |I|.
    """
    _check_obstruction(obstruction)
    rules = GADGET_RULES[obstruction]
    chosen = set(independent_set)

    assignment = {}
    for vertex in colored_graph.vertices:
        color = colored_graph.color_of(vertex)
        assignment[vertex] = rules.zero_labels[color] if vertex in chosen else rules.one_labels[color]

    for rule in rules.edge_rules:
        if not rule.has_intermediate:
            continue
        for first, second in colored_graph.edges_between(rule.tail, rule.head):
            key_vertex = _endpoints(rule, first, second)[rule.key_color]
            assignment[intermediate_name(first, second)] = rule.intermediate_image[assignment[key_vertex]]

    return assignment


class ReductionCheck(object):
    def __init__(self, obstruction, k, independence_number, min_cost, budget):
        self.obstruction = obstruction
        self.k = k
        self.independence_number = independence_number
        self.min_cost = min_cost
        self.budget = budget
        self.vertex_count = budget + k

    @property
    def sharp(self):
        """
        The minimum cost is exactly |V(X)| - alpha(X).
        """
        return self.min_cost == self.vertex_count - self.independence_number

    @property
    def decision_agrees(self):
        return (self.independence_number >= self.k) == (self.min_cost <= self.budget)

    @property
    def holds(self):
        return self.sharp and self.decision_agrees


def check_reduction(obstruction, colored_graph, k, catalog=None, node_budget=DEFAULT_NODE_BUDGET,
                    independent_set_budget=DEFAULT_INDEPENDENT_SET_BUDGET):
    instance = gadget(obstruction, colored_graph, k, catalog)
    independence_number = max_independent_set(colored_graph.graph, independent_set_budget)
    optimum = minhom_bruteforce(instance.instance, instance.template, instance.costs, node_budget)

    check = ReductionCheck(obstruction, k, independence_number, optimum.cost, instance.budget)
    if not check.holds:
        logger.error(f"Reduction for {obstruction_name(obstruction)} fails on {colored_graph.name} with k={k}: "
                     f"alpha {independence_number}, min cost {optimum.cost}, budget {instance.budget}")
    return check


def verify_reduction(obstruction, colored_graph, k, catalog=None, node_budget=DEFAULT_NODE_BUDGET,
                     independent_set_budget=DEFAULT_INDEPENDENT_SET_BUDGET):
    return check_reduction(obstruction, colored_graph, k, catalog, node_budget, independent_set_budget).holds


def verify_forward_mapping(obstruction, colored_graph, independent_set, catalog=None):
    """
    (valid, cost) of the forward mapping on the gadget built with k = |I|.
    """
    instance = gadget(obstruction, colored_graph, len(independent_set), catalog)
    assignment = forward_mapping(obstruction, colored_graph, independent_set)
    return verify_homomorphism(instance.instance, instance.template, assignment, instance.costs)
