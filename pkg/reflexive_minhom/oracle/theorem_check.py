"""
Exhaustive check, over all reflexive digraphs up to isomorphism on at most n vertices, that having a Min-Max ordering
coincides with satisfying the three structural conditions.
"""
import logging
import multiprocessing
from reflexive_minhom.formats.digraph_format import serialize_digraph
from reflexive_minhom.formats.reports import format_report
from reflexive_minhom.oracle.enumeration import enumerate_reflexive_digraphs, decode, MAX_ENUMERATION_SIZE, \
    EnumerationSizeException
from reflexive_minhom.orderings.exchange import run_exchange
from reflexive_minhom.orderings.search import find_min_max_bruteforce
from reflexive_minhom.recognition.catalog import default_catalog
from reflexive_minhom.recognition.classifier import check_conditions

logger = logging.getLogger(__name__)

EXCHANGE_SUCCEEDED = "exchange"
EXCHANGE_STUCK = "stuck"
NOT_APPLICABLE = "-"


class ClassVerdict(object):
    def __init__(self, size, code, has_ordering, conditions_hold, certificate, exchange_outcome):
        self.size = size
        self.code = code
        self.has_ordering = has_ordering
        self.conditions_hold = conditions_hold
        self.certificate = certificate
        self.exchange_outcome = exchange_outcome

    @property
    def mismatch(self):
        return self.has_ordering != self.conditions_hold

    @property
    def key(self):
        return f"n{self.size}_{self.code}"


class TheoremReport(object):
    def __init__(self, max_size, verdicts):
        self.max_size = max_size
        self.verdicts = sorted(verdicts, key=lambda verdict: (verdict.size, verdict.code))

    @property
    def mismatches(self):
        return [verdict for verdict in self.verdicts if verdict.mismatch]

    def count(self, predicate):
        return sum(1 for verdict in self.verdicts if predicate(verdict))

    def summary(self):
        pairs = [("max_n", self.max_size),
                 ("classes", len(self.verdicts)),
                 ("with_min_max_ordering", self.count(lambda verdict: verdict.has_ordering)),
                 ("conditions_hold", self.count(lambda verdict: verdict.conditions_hold)),
                 ("exchange_succeeded", self.count(lambda verdict: verdict.exchange_outcome == EXCHANGE_SUCCEEDED)),
                 ("exchange_stuck", self.count(lambda verdict: verdict.exchange_outcome == EXCHANGE_STUCK)),
                 ("mismatches", len(self.mismatches))]
        text = format_report(pairs)

        for verdict in self.mismatches:
            text += f"\nMISMATCH {verdict.key}: min-max ordering {verdict.has_ordering}, " \
                    f"conditions {verdict.conditions_hold}\n"
            text += serialize_digraph(decode(verdict.size, verdict.code, name=verdict.key))

        return text

    def listing(self):
        """
        Machine-readable per-class verdict pairs.
        """
        pairs = []
        for verdict in self.verdicts:
            certificate = verdict.certificate.describe() if verdict.certificate is not None else NOT_APPLICABLE
            pairs.append(("class", f"{verdict.key} ordering={verdict.has_ordering} "
                                   f"conditions={verdict.conditions_hold} exchange={verdict.exchange_outcome} "
                                   f"certificate={certificate.replace(' ', '_')}"))
        return format_report(pairs)


def check_class(arguments):
    size, code, catalog = arguments
    digraph = decode(size, code)
    has_ordering = find_min_max_bruteforce(digraph, None) is not None
    conditions = check_conditions(digraph, catalog, None)
    exchange_outcome = NOT_APPLICABLE

    if conditions.holds:
        trace = run_exchange(digraph, conditions.bipartite_ordering)
        exchange_outcome = EXCHANGE_SUCCEEDED if trace.succeeded else EXCHANGE_STUCK

    return ClassVerdict(size, code, has_ordering, conditions.holds, conditions.certificate, exchange_outcome)


def verify_theorem(max_size, catalog=None, processes=1):
    if max_size < 1 or max_size > MAX_ENUMERATION_SIZE:
        raise EnumerationSizeException(f"Theorem check supports 1 to {MAX_ENUMERATION_SIZE} vertices, got {max_size}")

    catalog = catalog if catalog is not None else default_catalog()
    tasks = [(size, code, catalog) for size in range(1, max_size + 1)
             for code in enumerate_reflexive_digraphs(size, processes).codes]

    if processes > 1:
        with multiprocessing.get_context("spawn").Pool(processes=processes) as pool:
            verdicts = pool.map(check_class, tasks, chunksize=64)
    else:
        verdicts = [check_class(task) for task in tasks]

    report = TheoremReport(max_size, verdicts)
    for verdict in report.mismatches:
        logger.error(f"Mismatch on {verdict.key}: min-max ordering {verdict.has_ordering}, "
                     f"conditions {verdict.conditions_hold}")

    return report
