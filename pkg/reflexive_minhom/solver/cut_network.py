from fractions import Fraction
from math import lcm
import networkx as nx

SOURCE = "source"
SINK = "sink"
INFINITE = None

DEFAULT_CAPACITY_BUDGET = 2 ** 62


class CapacityOverflowException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class CutNetwork(object):
    """
    A directed network with exact (Fraction) capacities, some of them INFINITE, and a constant offset added to the
    cut value. Parallel arcs are merged: finite capacities add up, and an infinite arc absorbs any other.
    """

    def __init__(self, offset=0):
        self.offset = Fraction(offset)
        self._nodes = [SOURCE, SINK]
        self._node_set = {SOURCE, SINK}
        self._capacities = {}

    @property
    def nodes(self):
        return tuple(self._nodes)

    @property
    def arcs(self):
        return dict(self._capacities)

    def add_node(self, node):
        if node not in self._node_set:
            self._nodes.append(node)
            self._node_set.add(node)

    def add_arc(self, tail, head, capacity):
        if tail == head:
            return

        self.add_node(tail)
        self.add_node(head)

        if capacity is not INFINITE:
            capacity = Fraction(capacity)
            if capacity < 0:
                raise ValueError(f"Negative capacity {capacity} on {tail}->{head}")

        key = (tail, head)
        if key not in self._capacities:
            self._capacities[key] = capacity
        elif self._capacities[key] is INFINITE or capacity is INFINITE:
            self._capacities[key] = INFINITE
        else:
            self._capacities[key] += capacity

    def finite_capacities(self):
        return [capacity for capacity in self._capacities.values() if capacity is not INFINITE]

    def minimum_cut(self, capacity_budget=DEFAULT_CAPACITY_BUDGET):
        """
        Returns (cut value, source side). Capacities are scaled to integers by the least common denominator before
        networkx sees them; infinite arcs carry no capacity attribute, which networkx reads as unbounded.
        """
        finite = self.finite_capacities()
        scale = lcm(*(capacity.denominator for capacity in finite)) if len(finite) > 0 else 1
        scaled = {key: capacity if capacity is INFINITE else int(capacity * scale)
                  for key, capacity in self._capacities.items()}
        total = sum(value for value in scaled.values() if value is not INFINITE)

        if total > capacity_budget:
            raise CapacityOverflowException(f"Scaled capacities sum to {total}, above the budget of {capacity_budget}")

        network = nx.DiGraph()
        network.add_nodes_from(self._nodes)

        for (tail, head), capacity in scaled.items():
            if capacity is INFINITE:
                network.add_edge(tail, head)
            else:
                network.add_edge(tail, head, capacity=capacity)

        cut_value, (source_side, _) = nx.minimum_cut(network, SOURCE, SINK,
                                                     flow_func=nx.algorithms.flow.preflow_push)
        return Fraction(cut_value, scale), set(source_side)


def max_flow(network, capacity_budget=DEFAULT_CAPACITY_BUDGET):
    """
    The maximum flow value of the network (equal to its minimum cut, offset excluded) and the source side of a
    minimum cut.
    """
    return network.minimum_cut(capacity_budget)
