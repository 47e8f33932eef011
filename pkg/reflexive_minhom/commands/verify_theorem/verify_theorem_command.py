from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_ERROR
from reflexive_minhom.oracle.theorem_check import verify_theorem


class VerifyTheoremCommand(CommandBase):
    """
    Checks, for every reflexive digraph on up to max_n vertices, that a Min-Max ordering exists exactly when the
    three structural conditions hold. Any mismatch is printed with its digraph and makes the command exit 1.
    """

    def _run(self, out):
        report = verify_theorem(self._config.max_n, self._catalog(), self._config.workers)

        if self._config.listing != "":
            with open(self._output_path(self._config.listing), "w") as listing_file:
                listing_file.write(report.listing())

        out.write(report.summary())
        return EXIT_SUCCESS if len(report.mismatches) == 0 else EXIT_ERROR
