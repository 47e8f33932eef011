from reflexive_minhom.commands.config_base import ConfigBase
from reflexive_minhom.oracle.bruteforce import DEFAULT_NODE_BUDGET, DEFAULT_INDEPENDENT_SET_BUDGET


class ReduceCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.obstruction = ""  # h2 .. h6
        self.input = ""  # A three-coloured graph file
        self.k = 0
        self.out = ""
        self.catalog_dir = ""
        self.verify = False
        self.node_budget = DEFAULT_NODE_BUDGET
        self.independent_set_budget = DEFAULT_INDEPENDENT_SET_BUDGET

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
