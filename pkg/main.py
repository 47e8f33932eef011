import sys
import multiprocessing
from reflexive_minhom.cli import run


if __name__ == "__main__":
    # Enumeration workers are started with spawn so they behave the same on every platform
    try:
        multiprocessing.set_start_method("spawn")
    except RuntimeError:
        pass

    sys.exit(run(sys.argv[1:]))
