import argparse
from reflexive_minhom.utils.configuration_loader import ConfigurationLoader, IllFormedConfig
from reflexive_minhom.available_commands import get_available_commands


class ArgumentMissingException(Exception):
    def __init__(self, error_str):
        super().__init__(error_str)


class _NonExitingArgumentParser(argparse.ArgumentParser):
    """
    argparse exits with status 2 on bad arguments, which would read as an NP-complete verdict.
    """

    def error(self, message):
        raise IllFormedConfig(message)


class ArgparseManager(object):
    """
    Handles processing the command line, and then calls the ConfigurationLoader to actually load the command as
    appropriate.

    Command-line mode: <command> [path] [--output-dir DIR] [--key value ...]. Every --key value pair goes to the
    command's config, with dashes in the key read as underscores.
    Config-file mode: --config-file FILE.json --output-dir DIR [--resume-id N].
    """

    def __init__(self):
        self.command_line_mode_parser = self._create_command_line_mode_parser()
        self.config_mode_parser = self._create_config_mode_parser()

    @classmethod
    def _create_command_line_mode_parser(cls):
        # All other arguments will be converted to a dictionary and used the same way as if it were a configuration
        command_line_parser = _NonExitingArgumentParser(add_help=False, allow_abbrev=False)
        command_line_parser.add_argument("--output-dir", help="Directory receiving a run log and the command's output "
                                                              "files. Nothing is logged to disk without it.",
                                         type=str, default=None)

        return command_line_parser

    @classmethod
    def _create_config_mode_parser(cls):
        """
        If the "config-file" mode is run, these are the arguments expected.
        Example: python main.py --config-file configs/theorem_check.json --output-dir tmp
        """
        config_parser = _NonExitingArgumentParser(add_help=False, allow_abbrev=False)
        config_parser.add_argument("--config-file", type=str, help="The full path to the JSON file containing the "
                                                                   "command configs.")
        config_parser.add_argument("--output-dir", help="The output directory where the runs of all commands "
                                                        "generated by this config file are stored.",
                                   type=str, default="tmp")
        config_parser.add_argument("--resume-id", help="The id of the entry to run again",
                                   type=int, default=None)
        return config_parser

    @classmethod
    def _command_line_to_dict(cls, extras):
        """
        extras is ["command", "path", "--arg1", "val1", ...] with the path optional.
        """
        positionals = []
        while len(extras) > 0 and not extras[0].startswith("--"):
            positionals.append(extras.pop(0))

        if len(positionals) == 0:
            raise ArgumentMissingException("A command is required in command-line mode")

        if len(positionals) > 2:
            raise IllFormedConfig(f"Expected a command and at most one path, got {positionals}")

        if len(extras) % 2 != 0:
            raise ArgumentMissingException(f"Option {extras[-1]} needs a value")

        raw_command = {"command": positionals[0]}
        if len(positionals) == 2:
            raw_command["path"] = positionals[1]

        for i in range(0, len(extras), 2):
            if not extras[i].startswith("--"):
                raise IllFormedConfig(f"Expected an option name, got {extras[i]}")
            raw_command[extras[i][2:].replace("-", "_")] = extras[i + 1]

        return raw_command

    @classmethod
    def parse(cls, raw_args):
        available_commands = get_available_commands()

        argparser = ArgparseManager()
        configuration_loader = ConfigurationLoader(available_commands=available_commands)

        args, extras = argparser.config_mode_parser.parse_known_args(raw_args)

        # If we successfully parse a config_file, enter config-mode
        if args.config_file is not None:
            if len(extras) > 0:
                raise IllFormedConfig(f"Unknown arguments found: {extras}")

            command = configuration_loader.load_next_command_from_config(args.output_dir, args.config_file,
                                                                         resume_id=args.resume_id)
        else:
            # otherwise default to command-line mode and use command line parser
            args, extras = argparser.command_line_mode_parser.parse_known_args(raw_args)
            raw_command = cls._command_line_to_dict(list(extras))
            command = configuration_loader.load_command(raw_command, output_dir=args.output_dir)

        return command
