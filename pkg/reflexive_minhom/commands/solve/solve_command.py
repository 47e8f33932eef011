from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_NP_COMPLETE
from reflexive_minhom.formats.cost_format import load_costs
from reflexive_minhom.formats.digraph_format import load_digraph
from reflexive_minhom.formats.reports import format_assignment
from reflexive_minhom.oracle.bruteforce import minhom_bruteforce
from reflexive_minhom.recognition.classifier import classify
from reflexive_minhom.solver.minhom_solver import solve


class SolveCommand(CommandBase):
    """
    Minimum-cost homomorphism of an instance to a template. Templates with a Min-Max ordering go through the
    min-cut solver; otherwise the certificate is printed (exit 2), or with oracle set the brute-force search runs.
    """

    def _run(self, out):
        template = load_digraph(self._required("template"))
        instance = load_digraph(self._required("instance"))
        costs = load_costs(self._required("costs"), instance, template)

        verdict = classify(template, self._catalog(), self._config.template_limit)

        if verdict.polynomial:
            homomorphism = solve(template, verdict.ordering, instance, costs, self._config.capacity_budget)
            method = "min-cut"
        elif self._config.oracle:
            self._logger.info(f"{template.name} is NP-complete ({verdict.certificate.describe()}), "
                              f"solving by brute force")
            homomorphism = minhom_bruteforce(instance, template, costs, self._config.node_budget)
            method = "brute-force"
        else:
            self._write_report(out, [("template", template.name), ("verdict", verdict.label),
                                     ("certificate", verdict.certificate.describe()),
                                     ("embedding", verdict.certificate.vertex_listing())])
            return EXIT_NP_COMPLETE

        self._write_report(out, [("template", template.name), ("instance", instance.name), ("method", method),
                                 ("assignment", format_assignment(homomorphism.assignment)),
                                 ("cost", homomorphism.cost)])
        return EXIT_SUCCESS
