from reflexive_minhom.commands.config_base import ConfigBase
from reflexive_minhom.recognition.catalog import DEFAULT_CATALOG_SIZE


class VerifyTheoremCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.max_n = DEFAULT_CATALOG_SIZE
        self.listing = ""  # Optional file receiving one verdict line per isomorphism class
        self.catalog_dir = ""

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
