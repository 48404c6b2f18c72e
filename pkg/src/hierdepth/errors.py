"""Exception hierarchy shared by every module of the package."""


class HierDepthError(Exception):
    """Base class for all library errors."""


class CompositeModulus(HierDepthError, ValueError):
    pass


class ReducibleModulus(HierDepthError, ValueError):
    pass


class SpecMismatch(HierDepthError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(HierDepthError, ZeroDivisionError):
    pass


class FieldMismatch(HierDepthError, TypeError):
    pass


class SingularCurve(HierDepthError, ValueError):
    pass


class PointNotOnCurve(HierDepthError, ValueError):
    pass


class NegativeDegree(HierDepthError, ValueError):
    pass


class EvaluationAtPole(HierDepthError, ValueError):
    pass


class PointAtPole(HierDepthError, ValueError):
    """An evaluation set contains the pole of the divisor."""


class EmptyCode(HierDepthError, ValueError):
    pass


class SearchTooLarge(HierDepthError, RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


class DegreeTooLarge(HierDepthError, ValueError):
    pass


class HypothesisUnmet(HierDepthError, ValueError):
    pass


class LengthMismatch(HierDepthError, ValueError):
    pass


class NotASubset(HierDepthError, ValueError):
    pass


class ZeroColumn(HierDepthError, ValueError):
    """A generator column is zero: every section vanishes at that point."""


class TooManySubsets(SearchTooLarge):
    pass


class VerticalTangent(HierDepthError, ValueError):
    """x is not a local parameter at the requested arc center."""


class ParityViolation(HierDepthError, ValueError):
    pass


class InternalInconsistency(HierDepthError, RuntimeError):
    """Two independent oracles disagree."""
