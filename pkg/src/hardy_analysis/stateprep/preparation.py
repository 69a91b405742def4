"""Flawed (which-path recording) and Schmidt-form preparations of the Hardy state.

The flawed apparatus leaves a record of which term was produced: |HH> sends
no photon out of the polarizing beam splitters, while |HV> and |VH> each
send the partner V photon out of a different port. With that record held in
a three-level environment,

    (|HH>|e0> + |HV>|e1> + |VH>|e2>) / sqrt(3),

tracing the environment out leaves an incoherent mixture of the three terms.
"""

from __future__ import annotations

import math

import numpy as np
import structlog

from hardy_analysis.hardy import Convention, build_scenario, hardy_pre_state, weak_value_table
from hardy_analysis.stateprep.schmidt import schmidt_decompose
from hardy_core.constants import ATOL, TWO_PHOTON_LABELS
from hardy_core.exceptions import DecompositionMismatchError
from hardy_core.models import PreparationComparison, PreparationOutcome, WeakValueTable
from hardy_core.qcore import (
    DensityMatrix,
    Ket,
    basis_ket,
    complex_pairs,
    partial_trace,
    tensor,
    two_photon,
)

logger = structlog.get_logger()

ENVIRONMENT_LABELS: tuple[str, str, str] = ("e0", "e1", "e2")

# Two-photon term -> environment record it leaves behind
WHICH_PATH_RECORD: dict[str, str] = {"HH": "e0", "HV": "e1", "VH": "e2"}


def _outcome(procedure: str, rho: DensityMatrix, target: Ket) -> PreparationOutcome:
    return PreparationOutcome(
        procedure=procedure,
        state=rho,
        purity=rho.purity(),
        fidelity_with_target=rho.fidelity(target),
        coherence_offdiag_max=rho.max_offdiagonal(),
    )


def flawed_joint_state() -> Ket:
    """System (x) environment ket, environment least significant."""
    branches = [
        tensor(two_photon(term), basis_ket(record, ENVIRONMENT_LABELS))
        for term, record in WHICH_PATH_RECORD.items()
    ]
    total = branches[0]
    for branch in branches[1:]:
        total = total + branch
    return total.scaled(1.0 / math.sqrt(len(WHICH_PATH_RECORD)))


def simulate_flawed_prep(target: Ket | None = None) -> PreparationOutcome:
    """Trace the which-path environment out of the flawed apparatus's output."""
    target = target if target is not None else hardy_pre_state()
    joint = DensityMatrix.from_ket(flawed_joint_state())
    rho = partial_trace(joint, keep=1, dims=(len(TWO_PHOTON_LABELS), len(ENVIRONMENT_LABELS)))
    outcome = _outcome("flawed", rho, target)
    logger.info(
        "flawed_prep_simulated",
        fidelity=outcome.fidelity_with_target,
        purity=outcome.purity,
    )
    return outcome


def simulate_correct_prep(target: Ket | None = None) -> PreparationOutcome:
    """Rotate a|HH> + b|VV> into the target with the local Schmidt bases."""
    target = target if target is not None else hardy_pre_state()
    form = schmidt_decompose(target)
    prepared = form.reconstruct()
    outcome = _outcome("correct", DensityMatrix.from_ket(prepared), target)
    if outcome.fidelity_with_target < 1.0 - ATOL:
        msg = f"Schmidt preparation reached fidelity {outcome.fidelity_with_target}"
        raise DecompositionMismatchError(msg)
    logger.info("correct_prep_simulated", a=form.a, b=form.b)
    return outcome


def compare_preps(target: Ket | None = None) -> PreparationComparison:
    """Flawed versus Schmidt-form preparation of the same target.

    Weak values for the pure target are attached for context when the target
    is the Hardy state; mixed-state weak values are not computed.
    """
    hardy = hardy_pre_state()
    target = target if target is not None else hardy
    context: WeakValueTable | None = None
    if np.allclose(target.amps, hardy.amps, atol=ATOL, rtol=0.0):
        context = weak_value_table(build_scenario(Convention.V_INNER))
    return PreparationComparison(
        target=complex_pairs(target.amps),
        flawed=simulate_flawed_prep(target),
        correct=simulate_correct_prep(target),
        schmidt=schmidt_decompose(target).to_summary(),
        context_table=context,
    )
