from reflexive_minhom.commands.config_base import ConfigBase
from reflexive_minhom.oracle.bruteforce import DEFAULT_NODE_BUDGET
from reflexive_minhom.solver.cut_network import DEFAULT_CAPACITY_BUDGET


class SolveCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.template = ""
        self.instance = ""
        self.costs = ""
        self.catalog_dir = ""
        self.oracle = False  # Fall back to brute force when the template has no Min-Max ordering
        self.node_budget = DEFAULT_NODE_BUDGET
        self.capacity_budget = DEFAULT_CAPACITY_BUDGET

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
