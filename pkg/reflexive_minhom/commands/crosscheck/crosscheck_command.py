from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS, EXIT_ERROR
from reflexive_minhom.oracle.crosscheck import run_crosscheck
from reflexive_minhom.utils.utils import Utils


class CrosscheckCommand(CommandBase):
    """
    Randomised comparison of the min-cut solver and the hardness gadgets against the brute-force oracles. Without
    a seed one is drawn and printed, so any disagreement can be replayed.
    """

    def _run(self, out):
        seed = self._config.seed if self._config.seed is not None else Utils.seed()
        report = run_crosscheck(seed, self._config.solver_trials, self._config.gadget_trials,
                                self._config.max_instance_size, self._labeled_catalog())

        out.write(report.summary())
        return EXIT_SUCCESS if report.disagreements == 0 else EXIT_ERROR
