"""Pre/post-selected ensembles and the analytic weak-value formula."""

from hardy_analysis.weakval.ensemble import PrePostEnsemble, VectorOperator, WeakValue
from hardy_analysis.weakval.values import (
    postselection_probability,
    product_rule_violation,
    sum_rule_check,
    tensor_weak_value,
    vector_weak_value,
    weak_value,
)
from hardy_analysis.weakval.vector import (
    build_A12,
    decompose_A12,
    decomposition_residual,
    single_photon_observable,
)

__all__ = [
    "PrePostEnsemble",
    "VectorOperator",
    "WeakValue",
    "build_A12",
    "decompose_A12",
    "decomposition_residual",
    "postselection_probability",
    "product_rule_violation",
    "single_photon_observable",
    "sum_rule_check",
    "tensor_weak_value",
    "vector_weak_value",
    "weak_value",
]
