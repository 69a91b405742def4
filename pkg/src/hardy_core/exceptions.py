"""Custom exception hierarchy for hardy-weak-values."""

from __future__ import annotations


class HardyError(Exception):
    """Base exception for all hardy-weak-values errors."""


class InvalidStateError(HardyError):
    """Raised when a ket is non-finite, zero, or not normalized where required."""


class DimensionMismatchError(HardyError):
    """Raised when operands live in Hilbert spaces of different dimension."""


class NotHermitianError(HardyError):
    """Raised when an operator flagged Hermitian fails the Hermiticity check."""


class InvalidDensityMatrixError(HardyError):
    """Raised when a matrix is not Hermitian, unit-trace and positive semidefinite."""


class InvalidSpectralDecompositionError(HardyError):
    """Raised when projectors are not idempotent, orthogonal and complete."""


class FactorizationError(HardyError):
    """Raised when a dimension does not match the declared tensor factorization."""


class OrthogonalPostSelectionError(HardyError):
    """Raised when the post-selected state has (numerically) zero overlap."""


class DecompositionMismatchError(HardyError):
    """Raised when a decomposition does not reproduce the object it decomposes."""


class NotSeparableError(HardyError):
    """Raised when a vector-operator component is not a single-photon operator."""


class CouplingScheduleError(HardyError):
    """Raised when a coupling-strength list is not strictly decreasing and positive."""


class MeasurementRegimeError(HardyError):
    """Raised when a strong-regime readout is requested with g/sigma below threshold."""
