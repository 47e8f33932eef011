from abc import ABC, abstractmethod
from reflexive_minhom.orderings.search import DEFAULT_TEMPLATE_SIZE_LIMIT
from reflexive_minhom.utils.common_exceptions import OutputDirectoryNotSetException
from reflexive_minhom.utils.utils import Utils


class UnknownConfigEntry(Exception):
    pass


class MismatchTypeException(Exception):
    pass


class ConfigBase(ABC):
    """
    Base class of the command configurations. Each command reads a flat dictionary (from the command line or from one
    entry of a JSON config file) into the attributes of its config, whose defaults fix the expected types.
    """
    def __init__(self):
        self._output_dir = None  # Run directory, only set when the command runs with an output directory
        self.limit_template_size = DEFAULT_TEMPLATE_SIZE_LIMIT
        self.parallel = 1
        self.seed = None

    def set_output_dir(self, set_output_dir):
        self._output_dir = set_output_dir

    @property
    def has_output_dir(self):
        return self._output_dir is not None

    @property
    def output_dir(self):
        if self._output_dir is None:
            raise OutputDirectoryNotSetException("Config output directory not set. Call set_output_dir.")
        return self._output_dir

    @property
    def template_limit(self):
        # 0 or less lifts the soft limit
        return self.limit_template_size if self.limit_template_size > 0 else None

    @property
    def workers(self):
        return Utils.worker_count(self.parallel)

    def _auto_load_class_parameters(self, config_dict):
        """
        Grabs every parameter of this class from the configuration dictionary, using their exact names, if they are
        there. The type of the default is kept; a None default leaves the value as given.
        """
        for key, value in self.__dict__.items():
            if key.startswith("_"):
                continue

            default_val = self.__dict__[key]
            dict_val = config_dict.pop(key, value)

            # bool("false") is True, so strings need parsing
            if isinstance(default_val, bool) and isinstance(dict_val, str):
                try:
                    self.__dict__[key] = Utils.strtobool(dict_val)
                except ValueError:
                    raise MismatchTypeException(f"Config entry {key} expects a boolean, got {dict_val!r}")
            elif isinstance(default_val, list) and isinstance(dict_val, str):
                raise MismatchTypeException("Parsing lists from string is not currently supported, and will do "
                                            "unexpected things.")
            else:
                type_to_cast_to = type(default_val) if default_val is not None else lambda x: x

                try:
                    self.__dict__[key] = type_to_cast_to(dict_val)
                except ValueError:
                    raise MismatchTypeException(f"Config entry {key} expected type {type_to_cast_to} but dictionary "
                                                f"had {dict_val!r}")

        if isinstance(self.seed, str):
            try:
                self.seed = int(self.seed)
            except ValueError:
                raise MismatchTypeException(f"Config entry seed expects an integer, got {self.seed!r}")

        return self

    @abstractmethod
    def _load_from_dict_internal(self, config_dict):
        """
        Load the parameters from the input dict object into the current object (self), popping each one so the
        caller knows it was consumed. Should return the loaded config.
        """
        pass

    def load_from_dict(self, config_dict):
        """
        Raises UnknownConfigEntry if anything is left over once the config has taken what it knows.
        """
        loaded_config = self._load_from_dict_internal(config_dict)

        if len(config_dict) > 0:
            raise UnknownConfigEntry("Dict still had elements after parsing: {}".format(list(config_dict.keys())))

        return loaded_config
