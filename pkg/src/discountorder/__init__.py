"""Exact dominance and comparative-patience orders on prize and discount sequences."""

from .core import (
    INFINITE,
    DiscountSequence,
    Exponential,
    Explicit,
    HorizonMismatch,
    ParameterError,
    PreconditionError,
    PrizeSequence,
    QuasiHyperbolic,
    Rational,
    SequenceError,
    WeightSequence,
    family_from_json,
    format_rational,
    parse_rational,
    realize,
    weighted_sum,
)
from .deterioration import (
    DeteriorationChain,
    DeteriorationStep,
    apply_step,
    decompose,
    ratio_trace,
)
from .dominance import (
    DominanceVerdict,
    abel_sum,
    dominates,
    is_superior,
    pointwise_dominates,
    tighten,
)
from .patience import (
    GapRatioReport,
    PatienceVerdict,
    definitional_patience_holds,
    exponential_infinite_collapse,
    exponential_patience_threshold,
    gap_ratio_report,
    infinite_family_patience,
    is_more_patient,
    is_more_serene,
    monotone_ratio_check,
    patience_counterexample,
    patience_gap,
    two_period_check,
)

__version__ = "0.1.0"
