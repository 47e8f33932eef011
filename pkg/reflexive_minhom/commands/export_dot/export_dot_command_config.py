from reflexive_minhom.commands.config_base import ConfigBase


class ExportDotCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.path = ""
        self.out = ""  # Written to stdout when empty
        self.catalog_dir = ""

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
