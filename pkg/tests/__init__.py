# For some reason required for pytest in pycharm to work, but nowhere else.
