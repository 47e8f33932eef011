"""
Randomised agreement checks between the exact solvers and the brute-force oracles: the min-cut solver against
brute-force MinHOM on random band templates, and every hardness gadget against the independence number.
"""
import logging
import numpy as np
from reflexive_minhom.formats.reports import format_report
from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph
from reflexive_minhom.hardness.gadgets import check_reduction
from reflexive_minhom.hardness.labeling import GADGET_OBSTRUCTIONS
from reflexive_minhom.hardness.three_colored_graph import ThreeColoredGraph, COLORS
from reflexive_minhom.oracle.bruteforce import minhom_bruteforce
from reflexive_minhom.orderings.ordering import Ordering
from reflexive_minhom.solver.costs import CostMatrix
from reflexive_minhom.solver.minhom_solver import solve

logger = logging.getLogger(__name__)

DEFAULT_MAX_TEMPLATE_SIZE = 5
DEFAULT_MAX_INSTANCE_SIZE = 8
DEFAULT_MAX_COST = 9
ARC_PROBABILITY = 0.3
EDGE_PROBABILITY = 0.4


def random_band_template(rng, size):
    """
    A reflexive digraph with a Min-Max ordering: position p reaches the interval [lo(p), hi(p)] around itself, with
    lo and hi nondecreasing. Vertex names are declared in a shuffled order so the ordering is not the trivial one.
    """
    lo = [0] * size
    hi = [0] * size
    for position in range(size):
        lo[position] = int(rng.integers(lo[position - 1] if position > 0 else 0, position + 1))
        hi[position] = int(rng.integers(max(position, hi[position - 1] if position > 0 else 0), size))

    sequence = [f"h{position}" for position in range(size)]
    arcs = [(sequence[tail], sequence[head]) for tail in range(size) for head in range(lo[tail], hi[tail] + 1)]
    declared = [sequence[index] for index in rng.permutation(size)]
    return Digraph(declared, arcs, name="band"), Ordering(sequence)


def random_instance(rng, size):
    vertices = [f"g{index}" for index in range(size)]
    arcs = [(tail, head) for tail in vertices for head in vertices if rng.random() < ARC_PROBABILITY]
    return Digraph(vertices, arcs, name="instance")


def random_costs(rng, instance, template, max_cost=DEFAULT_MAX_COST):
    rows = rng.integers(0, max_cost + 1, size=(len(instance), len(template)))
    return CostMatrix.from_rows(instance.vertices, template.vertices, [[int(value) for value in row] for row in rows])


def random_three_colored_graph(rng, size):
    colors = {f"y{index}": COLORS[int(rng.integers(0, len(COLORS)))] for index in range(size)}
    vertices = list(colors)
    edges = [(first, second) for position, first in enumerate(vertices) for second in vertices[position + 1:]
             if colors[first] != colors[second] and rng.random() < EDGE_PROBABILITY]
    return ThreeColoredGraph(UndirectedGraph(vertices, edges, name="x"), colors)


class CrosscheckReport(object):
    def __init__(self, seed):
        self.seed = seed
        self.solver_trials = 0
        self.solver_disagreements = 0
        self.gadget_trials = 0
        self.gadget_disagreements = 0

    @property
    def disagreements(self):
        return self.solver_disagreements + self.gadget_disagreements

    def summary(self):
        return format_report([("seed", self.seed),
                              ("solver_trials", self.solver_trials),
                              ("solver_disagreements", self.solver_disagreements),
                              ("gadget_trials", self.gadget_trials),
                              ("gadget_disagreements", self.gadget_disagreements)])


def crosscheck_solver(rng, report, trials, max_template_size=DEFAULT_MAX_TEMPLATE_SIZE,
                      max_instance_size=DEFAULT_MAX_INSTANCE_SIZE):
    for trial in range(trials):
        template, ordering = random_band_template(rng, int(rng.integers(1, max_template_size + 1)))
        instance = random_instance(rng, int(rng.integers(1, max_instance_size + 1)))
        costs = random_costs(rng, instance, template)

        solved = solve(template, ordering, instance, costs)
        expected = minhom_bruteforce(instance, template, costs)

        report.solver_trials += 1
        if solved.cost != expected.cost:
            report.solver_disagreements += 1
            logger.error(f"Solver trial {trial}: min-cut cost {solved.cost}, brute force {expected.cost}")


def crosscheck_gadgets(rng, report, trials, max_instance_size=DEFAULT_MAX_INSTANCE_SIZE, catalog=None):
    for trial in range(trials):
        colored_graph = random_three_colored_graph(rng, int(rng.integers(1, max_instance_size + 1)))
        k = int(rng.integers(0, len(colored_graph) + 1))

        for obstruction in GADGET_OBSTRUCTIONS:
            check = check_reduction(obstruction, colored_graph, k, catalog)
            report.gadget_trials += 1
            if not check.holds:
                report.gadget_disagreements += 1
                logger.error(f"Gadget trial {trial}, H{obstruction}: alpha {check.independence_number}, "
                             f"min cost {check.min_cost}, k {k}")


def run_crosscheck(seed, solver_trials, gadget_trials, max_instance_size=DEFAULT_MAX_INSTANCE_SIZE, catalog=None):
    rng = np.random.default_rng(seed)
    report = CrosscheckReport(seed)

    crosscheck_solver(rng, report, solver_trials, max_instance_size=max_instance_size)
    crosscheck_gadgets(rng, report, gadget_trials, max_instance_size=max_instance_size, catalog=catalog)

    logger.info(f"Crosscheck with seed {seed}: {report.disagreements} disagreements")
    return report
