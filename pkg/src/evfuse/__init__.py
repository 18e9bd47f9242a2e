"""Evidence fusion with sensor reliabilities from range-dependent confidence curves.

Everything is immutable after construction and every operation is a pure
function of its inputs, so the whole API is safe for concurrent use.
"""

from .bessel import bessel_j, bessel_y
from .confidence import (
    ConfidenceCurve,
    CurveParams,
    RadarParams,
    amplitude,
    bessel_order,
    confidence_curve,
    gamma_from_radar,
    max_range,
    prob_density,
    received_power,
    reliability_at,
)
from .errors import (
    AllUnreliable,
    ComplexOrderRegime,
    DegenerateCurve,
    EmptyFocalSet,
    FrameMismatch,
    FusionError,
    MassSumViolation,
    NonPositiveArgument,
    NonPositiveDistance,
    OrderOutOfRange,
    ParseError,
    TotalConflict,
    UnknownLabel,
    ValidationError,
    WeightSumViolation,
)
from .evidence import (
    Bpa,
    FocalSet,
    Frame,
    bpa_new,
    combine_dempster,
    combine_sequential,
    conflict,
    self_combine,
    vacuous,
    weighted_average,
)
from .pipeline import (
    STRATEGIES,
    STRATEGY_CLASSICAL,
    STRATEGY_MURPHY,
    STRATEGY_RELIABILITY,
    FusionResult,
    SensorReport,
    StrategyOutcome,
    compare_strategies,
    credibility,
    fuse,
    resolve_reliability,
)
from .scenario import (
    load_scenario,
    parse_scenario,
    render_curve_export,
    serialize_scenario,
    subset_string,
)

__version__ = "0.1.0"

__all__ = [
    "AllUnreliable",
    "Bpa",
    "ComplexOrderRegime",
    "ConfidenceCurve",
    "CurveParams",
    "DegenerateCurve",
    "EmptyFocalSet",
    "FocalSet",
    "Frame",
    "FrameMismatch",
    "FusionError",
    "FusionResult",
    "MassSumViolation",
    "NonPositiveArgument",
    "NonPositiveDistance",
    "OrderOutOfRange",
    "ParseError",
    "RadarParams",
    "STRATEGIES",
    "STRATEGY_CLASSICAL",
    "STRATEGY_MURPHY",
    "STRATEGY_RELIABILITY",
    "SensorReport",
    "StrategyOutcome",
    "TotalConflict",
    "UnknownLabel",
    "ValidationError",
    "WeightSumViolation",
    "amplitude",
    "bessel_j",
    "bessel_order",
    "bessel_y",
    "bpa_new",
    "combine_dempster",
    "combine_sequential",
    "compare_strategies",
    "confidence_curve",
    "conflict",
    "credibility",
    "fuse",
    "gamma_from_radar",
    "load_scenario",
    "max_range",
    "parse_scenario",
    "prob_density",
    "received_power",
    "reliability_at",
    "render_curve_export",
    "resolve_reliability",
    "self_combine",
    "serialize_scenario",
    "subset_string",
    "vacuous",
    "weighted_average",
]
