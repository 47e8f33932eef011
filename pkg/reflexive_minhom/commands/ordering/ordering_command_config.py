from reflexive_minhom.commands.config_base import ConfigBase


class OrderingCommandConfig(ConfigBase):

    def __init__(self):
        super().__init__()
        self.path = ""
        self.catalog_dir = ""
        self.search_only = False  # Skip the exchange procedure and search orderings exhaustively

    def _load_from_dict_internal(self, config_dict):
        return self._auto_load_class_parameters(config_dict)
