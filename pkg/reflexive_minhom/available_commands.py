
class CommandStruct(object):
    def __init__(self, command, config):
        self.command = command
        self.config = config


class LazyDict(dict):
    """
    Takes a dictionary of lambdas, and executes the lambda on get for the item.
    Commands are only imported when they are asked for, so running one does not pay for loading the others.
    """
    def __init__(self, dict):
        super().__init__(dict)
        self._dict = dict

    def __getitem__(self, item):
        return self._dict[item]()


def load_classify():
    from reflexive_minhom.commands.classify.classify_command import ClassifyCommand
    from reflexive_minhom.commands.classify.classify_command_config import ClassifyCommandConfig
    return CommandStruct(ClassifyCommand, ClassifyCommandConfig)


def load_ordering():
    from reflexive_minhom.commands.ordering.ordering_command import OrderingCommand
    from reflexive_minhom.commands.ordering.ordering_command_config import OrderingCommandConfig
    return CommandStruct(OrderingCommand, OrderingCommandConfig)


def load_solve():
    from reflexive_minhom.commands.solve.solve_command import SolveCommand
    from reflexive_minhom.commands.solve.solve_command_config import SolveCommandConfig
    return CommandStruct(SolveCommand, SolveCommandConfig)


def load_catalog():
    from reflexive_minhom.commands.catalog.catalog_command import CatalogCommand
    from reflexive_minhom.commands.catalog.catalog_command_config import CatalogCommandConfig
    return CommandStruct(CatalogCommand, CatalogCommandConfig)


def load_reduce():
    from reflexive_minhom.commands.reduce.reduce_command import ReduceCommand
    from reflexive_minhom.commands.reduce.reduce_command_config import ReduceCommandConfig
    return CommandStruct(ReduceCommand, ReduceCommandConfig)


def load_verify_theorem():
    from reflexive_minhom.commands.verify_theorem.verify_theorem_command import VerifyTheoremCommand
    from reflexive_minhom.commands.verify_theorem.verify_theorem_command_config import VerifyTheoremCommandConfig
    return CommandStruct(VerifyTheoremCommand, VerifyTheoremCommandConfig)


def load_export_dot():
    from reflexive_minhom.commands.export_dot.export_dot_command import ExportDotCommand
    from reflexive_minhom.commands.export_dot.export_dot_command_config import ExportDotCommandConfig
    return CommandStruct(ExportDotCommand, ExportDotCommandConfig)


def load_crosscheck():
    from reflexive_minhom.commands.crosscheck.crosscheck_command import CrosscheckCommand
    from reflexive_minhom.commands.crosscheck.crosscheck_command_config import CrosscheckCommandConfig
    return CommandStruct(CrosscheckCommand, CrosscheckCommandConfig)


def get_available_commands():
    """
    The registry of subcommands. To add one, create its folder under commands/ with a command (see command_base.py)
    and a config (see config_base.py), and add it here.
    """
    commands = LazyDict({
        "classify": load_classify,
        "ordering": load_ordering,
        "solve": load_solve,
        "catalog": load_catalog,
        "reduce": load_reduce,
        "verify-theorem": load_verify_theorem,
        "export-dot": load_export_dot,
        "crosscheck": load_crosscheck,
    })

    return commands
