from reflexive_minhom.commands.config_base import ConfigBase


class ClassifyCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.path = ""  # The template digraph file
        self.catalog_dir = ""  # A catalog written by the catalog command; derived on the fly when empty

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
