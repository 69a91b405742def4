"""Complex linear algebra over small labeled Hilbert spaces."""

from hardy_core.qcore.linalg import (
    apply,
    dagger,
    embed,
    expectation,
    inner,
    operator_partial_trace,
    outer,
    partial_trace,
    tensor,
)
from hardy_core.qcore.operators import (
    DensityMatrix,
    Operator,
    SpectralOperator,
    hermitian_eig_2x2,
    identity,
    projector,
)
from hardy_core.qcore.serialization import complex_pairs
from hardy_core.qcore.states import Ket, basis_ket, ket, photon, two_photon

__all__ = [
    "DensityMatrix",
    "Ket",
    "Operator",
    "SpectralOperator",
    "apply",
    "basis_ket",
    "complex_pairs",
    "dagger",
    "embed",
    "expectation",
    "hermitian_eig_2x2",
    "identity",
    "inner",
    "ket",
    "operator_partial_trace",
    "outer",
    "partial_trace",
    "photon",
    "projector",
    "tensor",
    "two_photon",
]
