import logging
import os
import random
import numpy as np
import psutil


class Utils(object):

    @classmethod
    def create_logger(cls, file_path=None, name="reflexive_minhom"):
        """
        Returns the package logger. Module loggers (logging.getLogger(__name__)) are its children, so anything the
        library logs ends up in the same handlers.
        The stream handler is only ever added once. If a file_path is given, a file handler for it is attached unless
        one for the same file is already present.
        """
        logger = logging.getLogger(name)
        formatter = logging.Formatter("%(asctime)s;%(levelname)s;%(message)s")

        # Since getLogger will always retrieve the same logger, we need to make sure we don't add many duplicate handlers
        if len(logger.handlers) == 0:
            stream_handler = logging.StreamHandler()
            stream_handler.setFormatter(formatter)
            stream_handler.setLevel(logging.INFO)
            logger.addHandler(stream_handler)
            logger.setLevel(logging.DEBUG)

        if file_path is not None:
            absolute_path = os.path.abspath(file_path)
            existing_files = [handler.baseFilename for handler in logger.handlers
                              if isinstance(handler, logging.FileHandler)]

            if absolute_path not in existing_files:
                file_handler = logging.FileHandler(absolute_path)
                file_handler.setFormatter(formatter)
                file_handler.setLevel(logging.DEBUG)
                logger.addHandler(file_handler)

        return logger

    @classmethod
    def seed(cls, seed=None):
        # Use the operating system to generate a seed for us, as it is not useful to seed a randomizer with itself
        if seed is None:
            seed = int.from_bytes(os.urandom(4), byteorder="little")

        np.random.seed(seed)
        random.seed(seed)

        return seed

    @classmethod
    def worker_count(cls, parallel):
        """
        parallel <= 0 means "use the machine": one worker per physical core (logical cores if psutil can't tell).
        """
        if parallel > 0:
            return parallel

        return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1

    @classmethod
    def strtobool(cls, value):
        """
        Accepts the same strings as distutils.util.strtobool, but returns a bool.
        """
        value = value.strip().lower()

        if value in ("y", "yes", "t", "true", "on", "1"):
            return True
        elif value in ("n", "no", "f", "false", "off", "0"):
            return False

        raise ValueError(f"Invalid truth value {value}")
