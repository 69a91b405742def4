"""Flawed and Schmidt-form preparation of the Hardy state."""

from hardy_analysis.stateprep.preparation import (
    ENVIRONMENT_LABELS,
    WHICH_PATH_RECORD,
    compare_preps,
    flawed_joint_state,
    simulate_correct_prep,
    simulate_flawed_prep,
)
from hardy_analysis.stateprep.schmidt import PHASE_CONVENTION, SchmidtForm, schmidt_decompose

__all__ = [
    "ENVIRONMENT_LABELS",
    "PHASE_CONVENTION",
    "WHICH_PATH_RECORD",
    "SchmidtForm",
    "compare_preps",
    "flawed_joint_state",
    "schmidt_decompose",
    "simulate_correct_prep",
    "simulate_flawed_prep",
]
