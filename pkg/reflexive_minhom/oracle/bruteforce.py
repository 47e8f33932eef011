"""
Exponential ground-truth oracles: exact MinHOM by branch and bound, and the independence number.
"""
import logging
from collections import deque
from fractions import Fraction
import networkx as nx
from reflexive_minhom.solver.costs import Homomorphism
from reflexive_minhom.utils.common_exceptions import BudgetExceededException

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 8
DEFAULT_INDEPENDENT_SET_BUDGET = 20


class NoHomomorphismException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def _breadth_first_order(instance):
    """
    Instance vertex indices in BFS order over the underlying graph, starting each component at its first vertex.
    """
    size = len(instance)
    neighbors = [instance.successor_mask(index) | instance.predecessor_mask(index) for index in range(size)]
    seen = [False] * size
    order = []

    for root in range(size):
        if seen[root]:
            continue

        seen[root] = True
        queue = deque([root])

        while queue:
            current = queue.popleft()
            order.append(current)
            for other in range(size):
                if neighbors[current] >> other & 1 and not seen[other]:
                    seen[other] = True
                    queue.append(other)

    return order


def minhom_bruteforce(instance, template, costs, node_budget=DEFAULT_NODE_BUDGET):
    """
    A minimum-cost homomorphism found by depth-first branch and bound. Instance vertices are assigned in BFS order,
    template vertices tried cheapest first, and a branch is cut once its cost plus the cheapest completion of the
    remaining vertices cannot beat the best map so far. Raises BudgetExceededException after node_budget
    search nodes.
    """
    costs.check_matches(instance, template)

    order = _breadth_first_order(instance)
    template_size = len(template)
    unary = [[costs.cost(instance.vertices[index], template_vertex) for template_vertex in template.vertices]
             for index in order]
    candidates = [sorted(range(template_size), key=lambda label, row=row: (row[label], label)) for row in unary]
    cheapest = [min(row) if len(row) > 0 else Fraction(0) for row in unary]
    remaining_bound = [sum(cheapest[position:], Fraction(0)) for position in range(len(order) + 1)]

    position_of = {vertex_index: position for position, vertex_index in enumerate(order)}
    constraints = []
    for position, vertex_index in enumerate(order):
        # (earlier position, instance arc goes from the earlier vertex) plus self loops
        outgoing = [(position_of[other], False) for other in range(len(instance))
                    if instance.has_arc_at(vertex_index, other) and position_of[other] < position]
        incoming = [(position_of[other], True) for other in range(len(instance))
                    if instance.has_arc_at(other, vertex_index) and position_of[other] < position]
        constraints.append((instance.has_arc_at(vertex_index, vertex_index), outgoing + incoming))

    best_cost = None
    best_labels = None

    if template.is_reflexive() and template_size > 0:
        for label in range(template_size):
            constant_cost = sum((row[label] for row in unary), Fraction(0))
            if best_cost is None or constant_cost < best_cost:
                best_cost, best_labels = constant_cost, [label] * len(order)

    labels = [None] * len(order)
    nodes = 0

    def search(position, current_cost):
        nonlocal best_cost, best_labels, nodes

        if position == len(order):
            if best_cost is None or current_cost < best_cost:
                best_cost, best_labels = current_cost, list(labels)
            return

        needs_loop, earlier = constraints[position]

        for label in candidates[position]:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededException(f"Brute-force MinHOM exceeded its budget of {node_budget} search nodes")

            cost = current_cost + unary[position][label]
            if best_cost is not None and cost + remaining_bound[position + 1] >= best_cost:
                # Candidates are sorted by cost, so every later label is at least as expensive
                break

            if needs_loop and not template.has_arc_at(label, label):
                continue

            if all(template.has_arc_at(labels[other], label) if is_incoming else
                   template.has_arc_at(label, labels[other]) for other, is_incoming in earlier):
                labels[position] = label
                search(position + 1, cost)
                labels[position] = None

    search(0, Fraction(0))

    if best_labels is None:
        raise NoHomomorphismException(f"{instance.name} has no homomorphism to {template.name}")

    logger.debug(f"Brute-force MinHOM of {instance.name} over {template.name}: cost {best_cost} after {nodes} nodes")
    assignment = {instance.vertices[vertex_index]: template.vertices[best_labels[position]]
                  for position, vertex_index in enumerate(order)}
    return Homomorphism({vertex: assignment[vertex] for vertex in instance.vertices}, best_cost)


def maximum_independent_set(graph, budget=DEFAULT_INDEPENDENT_SET_BUDGET):
    """
    A largest independent set of an undirected graph, as a sorted tuple of vertex names. Looped vertices are never
    included. Exact, via a maximum clique of the complement.
    """
    if len(graph) > budget:
        raise BudgetExceededException(f"Independent set oracle limited to {budget} vertices, "
                                      f"{graph.name} has {len(graph)}")

    candidates = [vertex for index, vertex in enumerate(graph.vertices) if not graph.has_edge_at(index, index)]
    if len(candidates) == 0:
        return ()

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(candidates)
    nx_graph.add_edges_from((first, second) for first, second in graph.edges
                            if first != second and first in candidates and second in candidates)

    clique, _ = nx.max_weight_clique(nx.complement(nx_graph), weight=None)
    return tuple(sorted(clique, key=graph.index_of))


def max_independent_set(graph, budget=DEFAULT_INDEPENDENT_SET_BUDGET):
    return len(maximum_independent_set(graph, budget))
