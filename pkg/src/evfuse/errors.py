"""Exception types shared across the package."""

from __future__ import annotations


class FusionError(ValueError):
    """Base class for all domain errors raised by this package."""


class FrameMismatch(FusionError):
    """Operands are defined over different frames of discernment."""


class EmptyFocalSet(FusionError):
    """Mass was assigned to the empty set."""


class MassSumViolation(FusionError):
    """Masses of an assignment do not sum to one within tolerance."""


class UnknownLabel(FusionError):
    """A hypothesis label does not belong to the frame."""


class TotalConflict(FusionError):
    """Dempster's rule is undefined: the conflict coefficient reaches one."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class WeightSumViolation(FusionError):
    """Averaging weights do not sum to one within tolerance."""


class AllUnreliable(FusionError):
    """Every sensor reliability is numerically zero."""


class NonPositiveDistance(FusionError):
    """A distance argument must be strictly positive."""


class NonPositiveArgument(FusionError):
    """A function argument lies outside its positive domain."""


class OrderOutOfRange(FusionError):
    """Bessel order outside the supported range."""


class ComplexOrderRegime(FusionError):
    """Potential strength too large for a real Bessel order."""


class DegenerateCurve(FusionError):
    """The sampled density is numerically zero; nothing to normalize."""


class ParseError(FusionError):
    """A scenario document is malformed."""


class ValidationError(FusionError):
    """A parsed scenario fails domain validation."""

    def __init__(self, message: str, source_id: str | None = None):
        super().__init__(message)
        self.source_id = source_id
