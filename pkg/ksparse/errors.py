"""Exception types raised by ksparse.

Contract violations on inputs subclass ValueError so callers that only catch
ValueError keep working.
"""


class KSparseError(Exception):
    """Base class for all ksparse errors."""


class ParseError(KSparseError, ValueError):
    def __init__(self, message, path=None, lineno=None):
        """Raised when an input file does not follow its grammar.

        Args:
            message (str): What went wrong.
            path (str or None): The file being parsed.
            lineno (int or None): 1-based line number of the offending line.
        """
        self.path = path
        self.lineno = lineno
        location = ""
        if path is not None:
            location += "{0}".format(path)
        if lineno is not None:
            location += ":{0}".format(lineno)
        if location:
            message = "{0}: {1}".format(location, message)
        super().__init__(message)


class DimensionMismatchError(KSparseError, ValueError):
    pass


class FactorizationError(KSparseError, ValueError):
    pass


class RankConditionError(KSparseError, ValueError):
    def __init__(self, message, index=None, block=None):
        self.index = index
        self.block = block
        super().__init__(message)


class IncompatibleSystemError(KSparseError, ValueError):
    pass


class DisconnectedGraphError(KSparseError, ValueError):
    pass


class BudgetError(KSparseError, ValueError):
    """An iteration budget that cannot be executed (negative, or a target without any way to reach it)."""


class BudgetExhaustedError(KSparseError, RuntimeError):
    """The budget ran out while the measured error was still above the target."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
