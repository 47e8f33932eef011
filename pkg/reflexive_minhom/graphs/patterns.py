"""
The forbidden induced subgraphs of proper interval graphs (reflexive cycles of length at least four, claw, net,
tent) and of proper interval bigraphs (even cycles of length at least six, biclaw, binet, bitent).
"""
from reflexive_minhom.graphs.digraph import UndirectedGraph, BipartiteGraph


def _reflexive(vertices, edges, name):
    return UndirectedGraph(vertices, list(edges) + [(vertex, vertex) for vertex in vertices], name=name)


def reflexive_cycle(length):
    if length < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {length}")

    vertices = [f"c{index}" for index in range(length)]
    edges = [(vertices[index], vertices[(index + 1) % length]) for index in range(length)]
    return _reflexive(vertices, edges, f"C{length}")


def reflexive_path(length):
    vertices = [f"p{index}" for index in range(length)]
    edges = [(vertices[index], vertices[index + 1]) for index in range(length - 1)]
    return _reflexive(vertices, edges, f"P{length}")


def claw():
    return _reflexive(["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")], "claw")


def net():
    # Triangle with one pendant at each corner
    triangle = [("a1", "a2"), ("a2", "a3"), ("a3", "a1")]
    pendants = [("a1", "p1"), ("a2", "p2"), ("a3", "p3")]
    return _reflexive(["a1", "a2", "a3", "p1", "p2", "p3"], triangle + pendants, "net")


def tent():
    # Triangle x1 x2 x3; y_ij sees x_i and x_j only
    triangle = [("x1", "x2"), ("x2", "x3"), ("x3", "x1")]
    outer = [("y12", "x1"), ("y12", "x2"), ("y23", "x2"), ("y23", "x3"), ("y31", "x3"), ("y31", "x1")]
    return _reflexive(["x1", "x2", "x3", "y12", "y23", "y31"], triangle + outer, "tent")


def proper_interval_patterns(max_size):
    """
    (kind, pattern) pairs with at most max_size vertices, in the order certificates are searched for.
    """
    patterns = [(f"C{length}", reflexive_cycle(length)) for length in range(4, max_size + 1)]
    patterns += [(pattern.name, pattern) for pattern in (claw(), net(), tent()) if len(pattern) <= max_size]
    return patterns


def even_cycle(half_length):
    """
    The bipartite cycle C_2k with white w0..w(k-1) and black b0..b(k-1).
    """
    if half_length < 2:
        raise ValueError(f"An even cycle needs at least 4 vertices, got {2 * half_length}")

    white = [f"w{index}" for index in range(half_length)]
    black = [f"b{index}" for index in range(half_length)]
    edges = []

    for index in range(half_length):
        edges.append((white[index], black[index]))
        edges.append((white[(index + 1) % half_length], black[index]))

    return BipartiteGraph(white, black, edges, name=f"C{2 * half_length}")


def biclaw():
    # K_1,3 with every edge subdivided
    white = ["z", "l1", "l2", "l3"]
    black = ["m1", "m2", "m3"]
    edges = [("z", "m1"), ("z", "m2"), ("z", "m3"), ("l1", "m1"), ("l2", "m2"), ("l3", "m3")]
    return BipartiteGraph(white, black, edges, name="biclaw")


def binet():
    # Four-cycle w1 k1 w2 k2 with a pendant at w1, k1 and w2
    white = ["w1", "w2", "q2"]
    black = ["k1", "k2", "q1", "q3"]
    edges = [("w1", "k1"), ("w2", "k1"), ("w2", "k2"), ("w1", "k2"), ("w1", "q1"), ("q2", "k1"), ("w2", "q3")]
    return BipartiteGraph(white, black, edges, name="binet")


def bitent():
    # Domino t1 t2 t3 / b1 b2 b3 with rungs t_i b_i, plus a pendant at t2
    white = ["t1", "t3", "b2", "p"]
    black = ["t2", "b1", "b3"]
    edges = [("t1", "t2"), ("t3", "t2"), ("b2", "b1"), ("b2", "b3"), ("t1", "b1"), ("b2", "t2"), ("t3", "b3"),
             ("p", "t2")]
    return BipartiteGraph(white, black, edges, name="bitent")


def proper_interval_bigraph_patterns(max_size):
    """
    (kind, pattern) pairs with at most max_size vertices. The colour-swapped version of each asymmetric pattern
    is included under the same kind, since the host's colouring is fixed.
    """
    patterns = [(f"C{2 * half}", even_cycle(half)) for half in range(3, max_size // 2 + 1)]

    for pattern in (biclaw(), binet(), bitent()):
        if len(pattern) <= max_size:
            patterns.append((pattern.name, pattern))
            patterns.append((pattern.name, pattern.swapped()))

    return patterns
