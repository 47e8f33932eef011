"""
Exact MinHOM for reflexive templates with a Min-Max ordering, as a minimum s-t cut.

Each instance vertex u gets threshold nodes (u, 2) .. (u, p); (u, a) on the source side means f(u) is at position a
or later. The source plays the role of (u, 1). A chain source -> (u, 2) -> ... -> (u, p) -> sink carries the shifted
unary costs, so exactly one chain arc is cut and it prices the chosen position. Infinite arcs keep the thresholds
monotone and, for every arc uv of the instance, enforce f(v) in [lo(f(u)), hi(f(u))] of the band profile.
"""
import logging
from fractions import Fraction
from reflexive_minhom.solver.band_profile import band_profile
from reflexive_minhom.solver.costs import Homomorphism, verify_homomorphism
from reflexive_minhom.solver.cut_network import CutNetwork, SOURCE, SINK, INFINITE, DEFAULT_CAPACITY_BUDGET

logger = logging.getLogger(__name__)

TAIL = "tail"
HEAD = "head"


class SolverInvariantError(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def arc_implications(profile):
    """
    Threshold implications for one instance arc tail -> head, as ((side, level), (side, level)) pairs:
    f(tail) >= a implies f(head) >= lo(a), and f(head) >= b implies f(tail) >= psi(b). Implications whose
    premise or conclusion is the always-true level 1 are left out.
    """
    implications = []

    for level in range(2, profile.size + 1):
        if profile.lo_of(level) >= 2:
            implications.append(((TAIL, level), (HEAD, profile.lo_of(level))))

    for level in range(2, profile.size + 1):
        if profile.psi_of(level) >= 2:
            implications.append(((HEAD, level), (TAIL, profile.psi_of(level))))

    return implications


def encoded_arc_relation(profile):
    """
    The position pairs (a, b) for which f(tail) = a, f(head) = b satisfies every arc implication.
    """
    relation = set()

    for tail_position in range(1, profile.size + 1):
        for head_position in range(1, profile.size + 1):
            positions = {TAIL: tail_position, HEAD: head_position}
            satisfied = all(positions[premise_side] < premise_level or positions[conclusion_side] >= conclusion_level
                            for (premise_side, premise_level), (conclusion_side, conclusion_level)
                            in arc_implications(profile))
            if satisfied:
                relation.add((tail_position, head_position))

    return relation


def _threshold_node(profile, vertex, level):
    return SOURCE if level <= 1 else (vertex, level)


def build_cut_network(profile, instance, costs):
    ordering = profile.ordering.sequence
    size = profile.size
    network = CutNetwork()

    for vertex in instance.vertices:
        unary = [costs.cost(vertex, template_vertex) for template_vertex in ordering]
        shift = min(unary)
        network.offset += shift
        shifted = [value - shift for value in unary]

        chain = [SOURCE] + [(vertex, level) for level in range(2, size + 1)] + [SINK]
        for position in range(size):
            network.add_arc(chain[position], chain[position + 1], shifted[position])

        for level in range(2, size):
            network.add_arc((vertex, level + 1), (vertex, level), INFINITE)

    implications = arc_implications(profile)
    for tail, head in instance.arcs:
        vertices = {TAIL: tail, HEAD: head}
        for (premise_side, premise_level), (conclusion_side, conclusion_level) in implications:
            network.add_arc(_threshold_node(profile, vertices[premise_side], premise_level),
                            _threshold_node(profile, vertices[conclusion_side], conclusion_level), INFINITE)

    return network


def solve(template, ordering, instance, costs, capacity_budget=DEFAULT_CAPACITY_BUDGET):
    """
    A minimum-cost homomorphism of instance to template. The ordering must be a Min-Max ordering of the reflexive
    template (band_profile raises BandViolation otherwise).
    """
    profile = band_profile(template, ordering)
    costs.check_matches(instance, template)

    network = build_cut_network(profile, instance, costs)
    cut_value, source_side = network.minimum_cut(capacity_budget)

    assignment = {}
    for vertex in instance.vertices:
        position = max([1] + [level for level in range(2, profile.size + 1) if (vertex, level) in source_side])
        assignment[vertex] = ordering.sequence[position - 1]

    valid, cost = verify_homomorphism(instance, template, assignment, costs)
    expected = cut_value + network.offset

    if not valid:
        raise SolverInvariantError(f"Recovered assignment {assignment} is not a homomorphism to {template.name}")

    if cost != expected:
        raise SolverInvariantError(f"Recovered assignment costs {cost}, but the cut promised {expected}")

    logger.debug(f"Solved {instance.name} over {template.name}: cost {cost} "
                 f"({len(network.nodes)} nodes, {len(network.arcs)} arcs)")
    return Homomorphism(assignment, Fraction(cost))
