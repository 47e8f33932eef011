import os
import sys
from abc import ABC, abstractmethod
from reflexive_minhom.formats.reports import format_report
from reflexive_minhom.hardness.labeling import identify_labeled_obstructions
from reflexive_minhom.recognition.catalog import load_catalog, default_catalog
from reflexive_minhom.utils.utils import Utils

EXIT_SUCCESS = 0
EXIT_ERROR = 1
EXIT_NP_COMPLETE = 2


class MissingInputException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class CommandBase(ABC):
    """
    A subcommand of the command-line tool. Subclasses get their config at construction, write their report to the
    given stream in _run and return the exit code. Exit codes are a stable contract: 0 success or polynomial,
    2 NP-complete verdict, 1 error.
    """

    def __init__(self, config):
        self._config = config

    @property
    def config(self):
        return self._config

    @property
    def _logger(self):
        log_path = os.path.join(self._config.output_dir, "core_process.log") if self._config.has_output_dir else None
        return Utils.create_logger(log_path)

    def _write_report(self, out, pairs):
        out.write(format_report(pairs))

    def _output_path(self, file_name):
        """
        Relative output paths land in the run directory when there is one.
        """
        if self._config.has_output_dir and not os.path.isabs(file_name):
            return os.path.join(self._config.output_dir, file_name)
        return file_name

    def _required(self, name):
        value = getattr(self._config, name)
        if value == "":
            raise MissingInputException(f"--{name.replace('_', '-')} is required by this command")
        return value

    def _catalog(self):
        """
        The catalog written by the catalog command when catalog_dir is set, otherwise the derived default.
        """
        catalog_dir = getattr(self._config, "catalog_dir", "")
        return load_catalog(catalog_dir) if catalog_dir != "" else default_catalog()

    def _labeled_catalog(self):
        """
        A catalog with H2..H6 labeled, or None to let the gadgets use the default one.
        """
        catalog_dir = getattr(self._config, "catalog_dir", "")
        if catalog_dir == "":
            return None

        catalog = load_catalog(catalog_dir)
        if any(member.labeling is not None for member in catalog.members):
            return catalog
        return identify_labeled_obstructions(catalog)

    @abstractmethod
    def _run(self, out):
        """
        Returns the exit code.
        """
        pass

    def try_run(self, out=None):
        out = out if out is not None else sys.stdout

        try:
            if self._config.seed is not None:
                Utils.seed(self._config.seed)
            return self._run(out)
        except Exception as e:
            self._logger.exception(f"Failed with exception: {e}")
            raise e
