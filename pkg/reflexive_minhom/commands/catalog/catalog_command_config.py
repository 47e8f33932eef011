from reflexive_minhom.commands.config_base import ConfigBase
from reflexive_minhom.recognition.catalog import DEFAULT_CATALOG_SIZE


class CatalogCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.max_size = DEFAULT_CATALOG_SIZE
        self.out = ""
        self.identify = True  # Name the members H1..H6 and attach their x1..x4 labelings

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
