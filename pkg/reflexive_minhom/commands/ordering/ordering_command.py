from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_NP_COMPLETE
from reflexive_minhom.formats.digraph_format import load_digraph
from reflexive_minhom.formats.reports import format_ordering
from reflexive_minhom.orderings.exchange import run_exchange
from reflexive_minhom.orderings.search import find_min_max_bruteforce
from reflexive_minhom.recognition.classifier import check_conditions, CertificateNotFoundError


class OrderingCommand(CommandBase):
    """
    Prints a Min-Max ordering of the template together with how it was obtained (number of exchanges, or the pair
    the exchange got stuck on before search took over), or the certificate that no ordering exists.
    """

    def _certificate_pairs(self, digraph, certificate):
        return [("template", digraph.name), ("certificate", certificate.describe()),
                ("embedding", certificate.vertex_listing())]

    def _run(self, out):
        digraph = load_digraph(self._required("path"))
        limit = self._config.template_limit

        if self._config.search_only:
            ordering = find_min_max_bruteforce(digraph, limit)
            if ordering is not None:
                self._write_report(out, [("template", digraph.name), ("ordering", format_ordering(ordering)),
                                         ("source", "search")])
                return EXIT_SUCCESS

        conditions = check_conditions(digraph, self._catalog(), limit)
        if not conditions.holds:
            self._write_report(out, self._certificate_pairs(digraph, conditions.certificate))
            return EXIT_NP_COMPLETE

        if self._config.search_only:
            raise CertificateNotFoundError(f"{digraph.name} has no Min-Max ordering yet passes all three conditions")

        trace = run_exchange(digraph, conditions.bipartite_ordering)
        pairs = [("template", digraph.name)]

        if trace.succeeded:
            pairs += [("ordering", format_ordering(trace.result)), ("source", "exchange"), ("swaps", trace.swaps)]
        else:
            self._logger.warning(f"{digraph.name}: exchange {trace.result.describe()}")
            ordering = find_min_max_bruteforce(digraph, limit)
            if ordering is None:
                raise CertificateNotFoundError(f"{digraph.name} has no Min-Max ordering yet passes all three "
                                               f"conditions")
            pairs += [("ordering", format_ordering(ordering)), ("source", "search"),
                      ("stuck", trace.result.describe())]

        self._write_report(out, pairs)
        return EXIT_SUCCESS
