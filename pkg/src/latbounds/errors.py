"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for errors raised by this package."""


class IllConditionedBasisError(LatticeError):
    """Basis too close to singular for a reliable dual / solve."""

    def __init__(self, cond, threshold):
        self.cond = float(cond)
        self.threshold = float(threshold)
        super().__init__(
            f"basis condition number {self.cond:.3e} exceeds {self.threshold:.1e}"
        )


class BudgetExceededError(LatticeError):
    """An enumeration or grid sweep ran past its node/sample budget.

    Carries how far the computation got, so callers can report partial
    progress instead of silently truncating.
    """

    def __init__(self, budget, visited, partial_count=None):
        self.budget = int(budget)
        self.visited = int(visited)
        self.partial_count = partial_count
        msg = f"budget {self.budget} exceeded after {self.visited} nodes"
        if partial_count is not None:
            msg += f" ({partial_count} points found so far)"
        super().__init__(msg)


class MissingTableError(LatticeError):
    """A numeric transform table is required but was not supplied."""


class ToleranceUnreachedError(LatticeError):
    """Quadrature could not certify the requested absolute error."""

    def __init__(self, requested, achieved, where=""):
        self.requested = float(requested)
        self.achieved = float(achieved)
        suffix = f" at {where}" if where else ""
        super().__init__(
            f"requested abs error {requested:.2e}, achieved {achieved:.2e}{suffix}"
        )
