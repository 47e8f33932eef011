from fractions import Fraction
from numbers import Rational
from reflexive_minhom.graphs.digraph import UnknownVertexException


class InvalidCostException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class MissingCostException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class IncompleteAssignmentException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def to_fraction(value):
    """
    Exact conversion of ints and rationals. Floats are refused.
    """
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise InvalidCostException(f"Costs must be exact rationals (int or Fraction), got {value!r}")
    return Fraction(value)


class CostMatrix(object):
    """
    c_i(u) for every instance vertex u and template vertex i, stored as Fractions.
    """

    def __init__(self, instance_vertices, template_vertices, entries):
        self._instance_vertices = tuple(instance_vertices)
        self._template_vertices = tuple(template_vertices)
        self._entries = {}

        for (instance_vertex, template_vertex), value in entries.items():
            if instance_vertex not in self._instance_vertices or template_vertex not in self._template_vertices:
                raise InvalidCostException(f"Cost given for unknown pair ({instance_vertex}, {template_vertex})")
            self._entries[(instance_vertex, template_vertex)] = to_fraction(value)

        for instance_vertex in self._instance_vertices:
            for template_vertex in self._template_vertices:
                if (instance_vertex, template_vertex) not in self._entries:
                    raise MissingCostException(f"No cost for instance vertex {instance_vertex} "
                                               f"and template vertex {template_vertex}")

    @classmethod
    def from_rows(cls, instance_vertices, template_vertices, rows):
        """
        rows[k][l] is the cost of sending the k-th instance vertex to the l-th template vertex.
        """
        entries = {}
        for instance_vertex, row in zip(instance_vertices, rows):
            if len(row) != len(template_vertices):
                raise MissingCostException(f"Row for {instance_vertex} has {len(row)} entries, "
                                           f"expected {len(template_vertices)}")
            for template_vertex, value in zip(template_vertices, row):
                entries[(instance_vertex, template_vertex)] = value

        return cls(instance_vertices, template_vertices, entries)

    @classmethod
    def uniform(cls, instance_vertices, template_vertices, value=0):
        return cls(instance_vertices, template_vertices,
                   {(u, i): value for u in instance_vertices for i in template_vertices})

    @property
    def instance_vertices(self):
        return self._instance_vertices

    @property
    def template_vertices(self):
        return self._template_vertices

    def cost(self, instance_vertex, template_vertex):
        return self._entries[(instance_vertex, template_vertex)]

    def row(self, instance_vertex):
        return [self._entries[(instance_vertex, template_vertex)] for template_vertex in self._template_vertices]

    def check_matches(self, instance, template):
        if set(self._instance_vertices) != set(instance.vertices):
            raise MissingCostException(f"Cost rows {list(self._instance_vertices)} do not match the instance "
                                       f"vertices {list(instance.vertices)}")
        if set(self._template_vertices) != set(template.vertices):
            raise MissingCostException(f"Cost columns {list(self._template_vertices)} do not match the template "
                                       f"vertices {list(template.vertices)}")

    def __eq__(self, other):
        return isinstance(other, CostMatrix) and self._instance_vertices == other._instance_vertices and \
            self._template_vertices == other._template_vertices and self._entries == other._entries

    def __hash__(self):
        return hash((self._instance_vertices, self._template_vertices))


class Homomorphism(object):
    def __init__(self, assignment, cost):
        self.assignment = dict(assignment)
        self.cost = Fraction(cost)

    def image(self, instance_vertex):
        return self.assignment[instance_vertex]

    def __repr__(self):
        mapping = " ".join(f"{u}->{i}" for u, i in self.assignment.items())
        return f"Homomorphism({mapping}; cost {self.cost})"


def verify_homomorphism(instance, template, assignment, costs):
    """
    Returns (valid, cost): whether the assignment preserves every arc, and its exact cost, which is computed even
    when the assignment is not a homomorphism.
    """
    for vertex in instance.vertices:
        if vertex not in assignment:
            raise IncompleteAssignmentException(f"Instance vertex {vertex} is not mapped")
        if not template.has_vertex(assignment[vertex]):
            raise UnknownVertexException(f"{vertex} is mapped to unknown template vertex {assignment[vertex]}")

    valid = all(template.has_arc(assignment[tail], assignment[head]) for tail, head in instance.arcs)
    cost = sum((costs.cost(vertex, assignment[vertex]) for vertex in instance.vertices), Fraction(0))
    return valid, cost
