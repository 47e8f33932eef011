from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_NP_COMPLETE
from reflexive_minhom.formats.digraph_format import load_digraph
from reflexive_minhom.formats.reports import format_ordering
from reflexive_minhom.recognition.classifier import classify


def verdict_pairs(digraph, verdict):
    pairs = [("template", digraph.name), ("verdict", verdict.label)]

    if verdict.polynomial:
        pairs += [("ordering", format_ordering(verdict.ordering)), ("source", verdict.source)]
    else:
        pairs += [("certificate", verdict.certificate.describe()),
                  ("embedding", verdict.certificate.vertex_listing())]

    return pairs


def verdict_exit_code(verdict):
    return EXIT_SUCCESS if verdict.polynomial else EXIT_NP_COMPLETE


class ClassifyCommand(CommandBase):
    """
    Prints the dichotomy verdict for a template: polynomial with a Min-Max ordering, or NP-complete with the
    certificate that was found.
    """

    def _run(self, out):
        digraph = load_digraph(self._required("path"))
        verdict = classify(digraph, self._catalog(), self._config.template_limit)

        self._logger.info(f"{digraph.name}: {verdict.label}")
        self._write_report(out, verdict_pairs(digraph, verdict))
        return verdict_exit_code(verdict)
