import os
from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_ERROR
from reflexive_minhom.formats.cost_format import serialize_costs
from reflexive_minhom.formats.digraph_format import save_digraph
from reflexive_minhom.formats.graph_format import load_three_colored_graph
from reflexive_minhom.formats.reports import format_report
from reflexive_minhom.hardness.gadgets import gadget, check_reduction, UnknownObstructionException

TEMPLATE_FILE = "template.digraph"
INSTANCE_FILE = "instance.digraph"
COSTS_FILE = "costs.csv"
PROVENANCE_FILE = "provenance.txt"


def parse_obstruction(text):
    """
    "h3", "H3" and "3" all name obstruction 3.
    """
    digits = text[1:] if text[:1] in ("h", "H") else text
    if not digits.isdigit():
        raise UnknownObstructionException(f"Cannot read an obstruction number from {text!r}")
    return int(digits)


class ReduceCommand(CommandBase):
    """
    Builds the hardness gadget of an obstruction from a three-coloured graph and writes the MinHOM instance:
    the template on x1..x4, the instance digraph, its costs and where each instance vertex comes from.
    """

    def _run(self, out):
        obstruction = parse_obstruction(self._required("obstruction"))
        colored_graph = load_three_colored_graph(self._required("input"))
        directory = self._output_path(self._required("out"))
        catalog = self._labeled_catalog()

        instance = gadget(obstruction, colored_graph, self._config.k, catalog)

        os.makedirs(directory, exist_ok=True)
        save_digraph(instance.template, os.path.join(directory, TEMPLATE_FILE))
        save_digraph(instance.instance, os.path.join(directory, INSTANCE_FILE))
        with open(os.path.join(directory, COSTS_FILE), "w") as costs_file:
            costs_file.write(serialize_costs(instance.costs))
        with open(os.path.join(directory, PROVENANCE_FILE), "w") as provenance_file:
            provenance_file.write(format_report([(vertex, instance.provenance[vertex])
                                                 for vertex in instance.instance.vertices]))

        pairs = [("obstruction", f"H{obstruction}"), ("input", colored_graph.name),
                 ("vertices", len(instance.instance)), ("arcs", instance.instance.num_arcs),
                 ("intermediates", len(instance.intermediates)), ("k", self._config.k),
                 ("budget", instance.budget), ("directory", directory)]
        exit_code = EXIT_SUCCESS

        if self._config.verify:
            check = check_reduction(obstruction, colored_graph, self._config.k, catalog, self._config.node_budget,
                                    self._config.independent_set_budget)
            pairs += [("independence_number", check.independence_number), ("min_cost", check.min_cost),
                      ("reduction_holds", check.holds)]
            exit_code = EXIT_SUCCESS if check.holds else EXIT_ERROR

        self._write_report(out, pairs)
        return exit_code
