"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: budget errors exit 3, verification
errors exit 1, everything derived from ``ValueError`` exits 2.
"""


class OpnlabError(Exception):
    """Base class for all toolkit errors."""


class BudgetExceeded(OpnlabError):
    """A configured resource budget ran out before the work finished."""


class FactorizationBudgetExceeded(BudgetExceeded):
    pass


class SegmentBudgetExceeded(BudgetExceeded):
    pass


class VerificationError(OpnlabError):
    """An identity or inequality that must hold was observed to fail."""


class CongruenceError(OpnlabError, ValueError):
    """Parameters violate the q = k = 1 (mod 4) / q >= 5 constraints."""


class StructuralError(OpnlabError, ValueError):
    """An integer does not have the requested structural shape."""


class EvenInput(StructuralError):
    pass


class NoUniqueOddExponentPrime(StructuralError):
    pass


class EulerCongruenceViolation(StructuralError):
    pass


class NotEuclidShape(StructuralError):
    pass


class MersenneCompositeError(StructuralError):
    pass


class SpoofSyntaxError(OpnlabError, ValueError):
    pass


class SpoofValidationError(OpnlabError, ValueError):
    pass
