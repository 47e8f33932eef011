import sys
from reflexive_minhom.commands.command_base import EXIT_ERROR
from reflexive_minhom.utils.argparse_manager import ArgparseManager
from reflexive_minhom.utils.utils import Utils


def run(raw_args, out=None, err=None):
    """
    Runs one command and returns its exit code: 0 success or polynomial, 2 NP-complete verdict, 1 any error,
    reported as a single line on err.
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    Utils.create_logger()

    try:
        command = ArgparseManager.parse(raw_args)

        if command is None:
            err.write("error: no command left to run in the config file\n")
            return EXIT_ERROR

        return command.try_run(out)
    except Exception as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_ERROR
