"""Shared numerical constants for hardy-weak-values."""

from __future__ import annotations

# Absolute tolerance for every O(1) comparison
ATOL = 1e-12

# Smallest eigenvalue accepted for a density matrix
POSITIVITY_ATOL = 1e-10

# |<post|pre>| at or below this makes weak values undefined
ORTHOGONAL_OVERLAP_ATOL = 1e-12

# Post-selected pointer norm at or below this is treated as zero
ZERO_NORM_ATOL = 1e-300

# Strong-regime branches lighter than this fraction of the post-selected weight are dropped
BRANCH_WEIGHT_RTOL = 1e-12

# Branches whose squared norm falls below this are dropped on coupling
BRANCH_DROP_ATOL = 1e-30

# Estimator errors below this count as exact (no convergence order fitted)
EXACT_ERROR_FLOOR = 1e-12

# Strong regime starts at g / sigma >= this
STRONG_REGIME_MIN_RATIO = 10.0

# g / sigma used when contrasting strong pointers with projective collapse
STRONG_CONTRAST_RATIO = 20.0

# Calibrated readout coefficients (checked against the analytic oracle in tests):
#   <p> sigma^2 / g      -> IMAG_READOUT_COEFFICIENT * Im<A>_w
#   <x1 x2> / (g1 g2)    -> JOINT_CORRELATION_COEFFICIENT * (Re<AB>_w + Re(<A>_w conj<B>_w))
IMAG_READOUT_COEFFICIENT = 0.5
JOINT_CORRELATION_COEFFICIENT = 0.5

# Couplings used to fit the readout coefficients
CALIBRATION_COUPLINGS: tuple[float, ...] = (1e-2, 1e-3, 1e-4)

DEFAULT_SIGMA = 1.0
DEFAULT_G_LIST: tuple[float, ...] = (0.2, 0.1, 0.05)
MIN_G_LIST_LENGTH = 3

# Single-photon basis order: index 0 = H, index 1 = V
PHOTON_LABELS: tuple[str, str] = ("H", "V")

# Two-photon basis order, photon 1 most significant
TWO_PHOTON_LABELS: tuple[str, str, str, str] = ("HH", "HV", "VH", "VV")

# Report envelope
SCHEMA_VERSION = "1"
FLOAT_FORMAT = ".17g"
