import logging
from reflexive_minhom.graphs.constructions import as_symmetric_digraph, induced_undirected, induced_bipartite
from reflexive_minhom.graphs.digraph import Embedding
from reflexive_minhom.graphs.embedding import find_induced
from reflexive_minhom.graphs.patterns import proper_interval_patterns, proper_interval_bigraph_patterns
from reflexive_minhom.orderings.search import find_min_max_bruteforce, find_bipartite_min_max, \
    DEFAULT_TEMPLATE_SIZE_LIMIT
from reflexive_minhom.recognition.certificates import SCertificate, BCertificate, RecognitionVerdict
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException

logger = logging.getLogger(__name__)

UNCLASSIFIED = "unclassified"


def _minimize(vertices, is_obstructed, restrict):
    """
    Deletes vertices one at a time, in order, while what remains is still obstructed.
    """
    kept = list(vertices)
    changed = True

    while changed:
        changed = False
        for vertex in list(kept):
            candidate = [other for other in kept if other != vertex]
            if is_obstructed(restrict(candidate)):
                kept = candidate
                changed = True

    return restrict(kept)


def _identity_embedding(vertices):
    return Embedding((vertex, vertex) for vertex in vertices)


def _graph_certificate(graph, limit):
    for kind, pattern in proper_interval_patterns(len(graph)):
        embedding = find_induced(pattern, graph)
        if embedding is not None:
            return SCertificate(kind, pattern, embedding)

    minimal = _minimize(graph.vertices,
                        lambda subgraph: find_min_max_bruteforce(as_symmetric_digraph(subgraph), limit) is None,
                        lambda subset: induced_undirected(graph, subset, name=UNCLASSIFIED))
    logger.warning(f"{graph.name} is not proper interval but contains no listed pattern; "
                   f"reporting the minimal subgraph on {' '.join(minimal.vertices)}")
    return SCertificate(UNCLASSIFIED, minimal, _identity_embedding(minimal.vertices))


def _bigraph_certificate(graph, limit):
    for kind, pattern in proper_interval_bigraph_patterns(len(graph)):
        embedding = find_induced(pattern, graph)
        if embedding is not None:
            return BCertificate(kind, pattern, embedding)

    minimal = _minimize(graph.white + graph.black,
                        lambda subgraph: find_bipartite_min_max(subgraph, limit) is None,
                        lambda subset: induced_bipartite(graph, subset, name=UNCLASSIFIED))
    logger.warning(f"{graph.name} is not a proper interval bigraph but contains no listed pattern; "
                   f"reporting the minimal subgraph on {' '.join(minimal.white + minimal.black)}")
    return BCertificate(UNCLASSIFIED, minimal, _identity_embedding(minimal.white + minimal.black))


def is_proper_interval(graph, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    Decides whether a reflexive graph is proper interval by searching for a Min-Max ordering of it (read as a
    symmetric digraph). On failure the certificate is an induced cycle of length >= 4, claw, net or tent.
    """
    if not graph.is_reflexive():
        raise NonReflexiveInputException(f"Proper interval recognition requires a reflexive graph, "
                                         f"{graph.name} is not")

    ordering = find_min_max_bruteforce(as_symmetric_digraph(graph), limit_template_size)

    if ordering is not None:
        return RecognitionVerdict(ordering=ordering)

    return RecognitionVerdict(certificate=_graph_certificate(graph, limit_template_size))


def is_proper_interval_bigraph(bipartite_graph, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    Decides whether a bipartite graph has a bipartite Min-Max ordering. On failure the certificate is an induced even
    cycle of length >= 6, biclaw, binet or bitent.
    """
    ordering = find_bipartite_min_max(bipartite_graph, limit_template_size)

    if ordering is not None:
        return RecognitionVerdict(ordering=ordering)

    return RecognitionVerdict(certificate=_bigraph_certificate(bipartite_graph, limit_template_size))
