"""Shared exception types."""


class GraphInputError(ValueError):
    """Malformed graph input (bad graph6 bytes, bad edge list, unknown name)."""


class BudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget before deciding.

    Raised instead of returning a possibly wrong answer.
    """

    def __init__(self, nodes: int, message: str = "search node budget exhausted"):
        super().__init__(f"{message} (nodes={nodes})")
        self.nodes = nodes


class RuleNotApplicable(Exception):
    """A coloring rule's preconditions do not hold; the dispatcher falls through."""


class RecolorInfeasibleError(RuntimeError):
    """Correctness tripwire: a deficit-driven recoloring or copy schedule could
    not be completed.  Unreachable if the construction's counting arguments
    hold; surfacing it beats silently emitting a non-equitable coloring.
    """
