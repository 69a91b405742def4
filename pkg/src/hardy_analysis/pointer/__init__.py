"""Exact von Neumann pointer simulation and weak-limit estimators."""

from hardy_analysis.pointer.calibration import (
    calibrate_imag_coefficient,
    calibrate_joint_coefficient,
    nearby_ensemble,
    random_observable,
    random_unit_ket,
)
from hardy_analysis.pointer.estimators import (
    couple_pair,
    estimate_joint,
    estimate_single,
    pointer_estimate,
    strong_regime,
)
from hardy_analysis.pointer.extrapolation import (
    check_schedule,
    fit_convergence_order,
    richardson_linear,
)
from hardy_analysis.pointer.readout import readout
from hardy_analysis.pointer.state import (
    Branch,
    GaussianBranchState,
    couple,
    gaussian_overlap,
    prepare,
)

__all__ = [
    "Branch",
    "GaussianBranchState",
    "calibrate_imag_coefficient",
    "calibrate_joint_coefficient",
    "check_schedule",
    "couple",
    "couple_pair",
    "estimate_joint",
    "estimate_single",
    "fit_convergence_order",
    "gaussian_overlap",
    "nearby_ensemble",
    "pointer_estimate",
    "prepare",
    "random_observable",
    "random_unit_ket",
    "readout",
    "richardson_linear",
    "strong_regime",
]
