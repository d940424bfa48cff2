"""
Graph Burning Toolkit - Error Types
All toolkit errors derive from ValueError so bad input keeps failing the
way callers already expect.
"""


class BurningError(ValueError):
    """Base class for every error raised by the toolkit"""


class GraphInputError(BurningError):
    """Bad vertex, label, budget or graph shape"""


class NoPathError(GraphInputError):
    """The two vertices lie in different components"""


class GraphParseError(GraphInputError):
    """A graph file could not be parsed"""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class OracleSizeError(BurningError):
    """The exact oracle refuses graphs above its vertex cap"""


class CallBudgetExceeded(BurningError):
    """CBRH hit its recursion depth or call budget"""


class InfeasibleBudgetError(BurningError):
    """A solver could not burn the graph within the requested budget"""
