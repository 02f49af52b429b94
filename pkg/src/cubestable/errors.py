"""Exception hierarchy shared by every module in the package.

All domain errors derive from :class:`CubeStableError` so callers (and the
CLI) can distinguish "you asked for something invalid" from "the computation
was cut off" without string matching.
"""


class CubeStableError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(CubeStableError):
    """Two operands live on hypercubes of different dimension."""


class DimensionTooLarge(CubeStableError):
    """A dense representation was requested beyond the supported ceiling."""


class KOutOfRange(CubeStableError):
    """A flip count k outside the meaningful range for the operation."""


class ZeroDimension(CubeStableError):
    """The operation is undefined on the 0-dimensional cube."""


class NotBoolean(CubeStableError):
    """A spectrum or polynomial does not evaluate to +/-1 everywhere."""


class NotKFunction(CubeStableError):
    """An input was required to be a k-function but is not one."""


class MissingVariable(CubeStableError):
    """An evaluation point does not assign every relevant variable."""


class IndexOverflow(CubeStableError):
    """A variable index was pushed past the supported 64-variable ceiling."""


class ShrinkNotAllowed(CubeStableError):
    """Padding can only increase the ambient dimension, never reduce it."""


class SupportOverlap(CubeStableError):
    """Inputs that must have pairwise disjoint variable supports do not."""


class ArityMismatch(CubeStableError):
    """A composition received the wrong number of inner functions."""


class ShapeMismatch(CubeStableError):
    """Two distributions do not share the same (n, length) shape."""


class PreconditionViolated(CubeStableError):
    """An argument combination outside the stated domain of a formula."""


class BudgetExceeded(CubeStableError):
    """A search or table exceeded its node / memory budget before finishing."""


class SearchBudgetExceeded(BudgetExceeded):
    """A depth-first search ran out of nodes before covering the space."""


class VerificationFailed(CubeStableError):
    """A self-check that must hold did not."""
