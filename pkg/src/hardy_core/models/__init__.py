"""Result models for hardy-weak-values."""

from hardy_core.models.pointer import (
    CoefficientFit,
    CouplingPoint,
    JointEstimate,
    JointPoint,
    PointerConfig,
    PointerReadout,
    SingleEstimate,
    StrongContrast,
    StrongOutcome,
    StrongReadout,
)
from hardy_core.models.preparation import (
    PreparationComparison,
    PreparationOutcome,
    SchmidtSummary,
)
from hardy_core.models.report import Report, canonical_json, format_float
from hardy_core.models.weak import (
    A12Analysis,
    ComplexValue,
    Narrative,
    StrongComparison,
    WeakValueTable,
)

__all__ = [
    "A12Analysis",
    "CoefficientFit",
    "ComplexValue",
    "CouplingPoint",
    "JointEstimate",
    "JointPoint",
    "Narrative",
    "PointerConfig",
    "PointerReadout",
    "PreparationComparison",
    "PreparationOutcome",
    "Report",
    "SchmidtSummary",
    "SingleEstimate",
    "StrongComparison",
    "StrongContrast",
    "StrongOutcome",
    "StrongReadout",
    "WeakValueTable",
    "canonical_json",
    "format_float",
]
