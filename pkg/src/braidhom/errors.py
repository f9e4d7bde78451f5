"""Exception hierarchy shared by every module."""


class BraidHomError(Exception):
    """Base class for all library errors."""


class TwistedCoefficientsError(BraidHomError, ValueError):
    """Raised when a computation is requested with orientation-sheaf coefficients."""

    def __init__(self, what="homology"):
        super().__init__(f"twisted coefficients not computable ({what}); "
                         "use f2, or z for an orientable even-dimensional manifold")


class CoefficientPolicyError(BraidHomError, ValueError):
    pass


class NotASubcomplexError(BraidHomError, ValueError):
    pass


class ChainComplexError(BraidHomError, ValueError):
    pass


class PresentationError(BraidHomError, ValueError):
    pass


class HypothesisError(BraidHomError, ValueError):
    """A theorem was invoked outside its hypotheses.

    ``theorem`` names the result whose hypothesis failed so that callers
    (and the CLI) can report it.
    """

    def __init__(self, theorem, message):
        self.theorem = theorem
        super().__init__(f"{theorem}: {message}")


class BudgetExceeded(BraidHomError, RuntimeError):
    def __init__(self, size, budget, stage="construction"):
        self.size = size
        self.budget = budget
        self.stage = stage
        super().__init__(f"budget exceeded during {stage}: {size} simplices > budget {budget}")


class CatalogError(BraidHomError, KeyError):
    pass
