from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_NP_COMPLETE
from reflexive_minhom.formats.digraph_format import load_digraph
from reflexive_minhom.formats.dot_export import to_dot
from reflexive_minhom.graphs.constructions import symmetric_subgraph, bipartite_double
from reflexive_minhom.recognition.certificates import SCertificate, BCertificate
from reflexive_minhom.recognition.classifier import classify


def evidence_graph(digraph, certificate):
    """
    The graph a certificate lives in: S(H), B(H) or H itself.
    """
    if isinstance(certificate, SCertificate):
        return symmetric_subgraph(digraph)
    if isinstance(certificate, BCertificate):
        return bipartite_double(digraph)
    return digraph


class ExportDotCommand(CommandBase):
    """
    Writes a Graphviz document of the verdict evidence: H ranked by its Min-Max ordering, or the host of the
    certificate with the embedded vertices highlighted. The exit code follows the verdict.
    """

    def _run(self, out):
        digraph = load_digraph(self._required("path"))
        verdict = classify(digraph, self._catalog(), self._config.template_limit)

        if verdict.polynomial:
            document = to_dot(digraph, ordering=verdict.ordering)
        else:
            certificate = verdict.certificate
            document = to_dot(evidence_graph(digraph, certificate), highlighted=certificate.embedding.host_vertices,
                              title=f"{digraph.name}: {certificate.describe()}")

        if self._config.out != "":
            with open(self._output_path(self._config.out), "w") as dot_file:
                dot_file.write(document)
        else:
            out.write(document)

        return EXIT_SUCCESS if verdict.polynomial else EXIT_NP_COMPLETE
