from reflexive_minhom.commands.config_base import ConfigBase
from reflexive_minhom.oracle.crosscheck import DEFAULT_MAX_INSTANCE_SIZE


class CrosscheckCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.solver_trials = 500
        self.gadget_trials = 100
        self.max_instance_size = DEFAULT_MAX_INSTANCE_SIZE
        self.catalog_dir = ""

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
