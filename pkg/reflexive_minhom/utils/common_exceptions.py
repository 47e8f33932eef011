class OutputDirectoryNotSetException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class TemplateSizeLimitExceeded(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class BudgetExceededException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class NonReflexiveInputException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)
