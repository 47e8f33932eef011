import logging
from reflexive_minhom.graphs.constructions import symmetric_subgraph, bipartite_double
from reflexive_minhom.graphs.embedding import find_induced
from reflexive_minhom.orderings.exchange import run_exchange
from reflexive_minhom.orderings.search import find_min_max_bruteforce, DEFAULT_TEMPLATE_SIZE_LIMIT
from reflexive_minhom.recognition.catalog import default_catalog
from reflexive_minhom.recognition.certificates import HCertificate, Polynomial, NPComplete
from reflexive_minhom.recognition.proper_interval import is_proper_interval, is_proper_interval_bigraph
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException

logger = logging.getLogger(__name__)


class CertificateNotFoundError(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class ConditionCheck(object):
    """
    Result of testing the three conditions in order. certificate is None when all hold; bipartite_ordering is the
    ordering of B(H) found on the way, when the second condition was reached and holds.
    """

    def __init__(self, certificate, bipartite_ordering=None):
        self.certificate = certificate
        self.bipartite_ordering = bipartite_ordering

    @property
    def holds(self):
        return self.certificate is None


def check_conditions(digraph, catalog=None, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    S(H) proper interval, then B(H) a proper interval bigraph, then no induced catalog member.
    """
    if not digraph.is_reflexive():
        raise NonReflexiveInputException(f"The dichotomy applies to reflexive digraphs, {digraph.name} is not")

    symmetric_verdict = is_proper_interval(symmetric_subgraph(digraph), limit_template_size)
    if not symmetric_verdict.accepted:
        return ConditionCheck(symmetric_verdict.certificate)

    bipartite_verdict = is_proper_interval_bigraph(bipartite_double(digraph), limit_template_size)
    if not bipartite_verdict.accepted:
        return ConditionCheck(bipartite_verdict.certificate)

    catalog = catalog if catalog is not None else default_catalog()
    for member in catalog.members:
        embedding = find_induced(member.digraph, digraph)
        if embedding is not None:
            return ConditionCheck(HCertificate(member.name, member.digraph, embedding, member.index),
                                  bipartite_verdict.ordering)

    return ConditionCheck(None, bipartite_verdict.ordering)


def classify(digraph, catalog=None, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    Polynomial with a Min-Max ordering, or NPComplete with the first certificate found. The ordering comes from the
    exchange procedure started at the bipartite ordering of B(H); when that gets stuck, from exhaustive search.
    """
    conditions = check_conditions(digraph, catalog, limit_template_size)

    if not conditions.holds:
        logger.debug(f"{digraph.name}: {conditions.certificate.describe()}")
        return NPComplete(conditions.certificate)

    trace = run_exchange(digraph, conditions.bipartite_ordering)
    if trace.succeeded:
        return Polynomial(trace.result, "exchange")

    logger.warning(f"{digraph.name}: exchange {trace.result.describe()}; falling back to ordering search")
    ordering = find_min_max_bruteforce(digraph, limit_template_size)

    if ordering is None:
        raise CertificateNotFoundError(f"{digraph.name} passes all three conditions but has no Min-Max ordering; "
                                       f"the obstruction catalog in use is incomplete")

    return Polynomial(ordering, "search")
