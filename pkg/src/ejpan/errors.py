"""Exception hierarchy shared by every ejpan module."""


class EJError(Exception):
    """Base class for all ejpan errors."""


class InvalidGenerator(EJError, ValueError):
    """Generator coefficients violate 0 <= a <= b, (a, b) != (0, 0)."""


class GeneratorTooSmall(InvalidGenerator):
    """Norm below 7: the six unit offsets are not distinct residues."""


class ConstructionMismatch(EJError):
    """BFS closure found a node count different from the norm."""


class FormulaGap(EJError):
    """A distance fell into no branch of the piecewise distribution formula."""


class IncompleteList(EJError):
    """Some distance 1..k had no representative during the broadcast sweep."""


class NotAdjacent(EJError, ValueError):
    pass


class NetworkTooLarge(EJError):
    """Exhaustive enumeration refused because the network exceeds the node cap."""


class BudgetExceeded(EJError):
    """Exhaustive enumeration visited more partial paths than allowed."""


class LabelError(EJError, ValueError):
    pass


class ChainStuck(EJError):
    """The chain extension could not grow a path any further.

    ``path`` is the longest path reached, so callers can inspect where
    the construction stopped.
    """

    def __init__(self, path, target_length):
        self.path = path
        self.target_length = target_length
        super().__init__(
            f"chain stuck at length {path.length} (target {target_length}) "
            f"between {path.start} and {path.end}"
        )

    def __reduce__(self):
        return type(self), (self.path, self.target_length)


class PanconnectivityFailure(EJError):
    """Raised by the all-pairs driver for the first pair whose chain got stuck."""

    def __init__(self, pair, stuck):
        self.pair = pair
        self.stuck = stuck
        super().__init__(f"pair {pair}: {stuck}")

    def __reduce__(self):
        return type(self), (self.pair, self.stuck)
