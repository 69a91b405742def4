"""Post-selected pointer moments from the closed-form Gaussian overlap algebra."""

from __future__ import annotations

import numpy as np
import structlog

from hardy_analysis.pointer.state import GaussianBranchState
from hardy_core.constants import ZERO_NORM_ATOL
from hardy_core.exceptions import (
    DimensionMismatchError,
    InvalidStateError,
    OrthogonalPostSelectionError,
)
from hardy_core.models import PointerReadout
from hardy_core.qcore import Ket

logger = structlog.get_logger()


def readout(state: GaussianBranchState, post: Ket) -> PointerReadout:
    """Project the system on ``post`` and return exact pointer moments.

    With c_j = <post|s_j> and W_jk = conj(c_j) c_k prod_p overlap(u_jp, u_kp):
      probability = sum W
      <x_p>       = sum W (u_jp + u_kp) / 2                / probability
      <p_p>       = sum W i (u_jp - u_kp) / (4 sigma_p^2)  / probability
      <x_p x_q>   = sum W mid_p mid_q / probability + delta_pq sigma_p^2
    """
    if not post.is_normalized:
        msg = f"Post-selected state must be normalized (norm {post.norm:.15f})"
        raise InvalidStateError(msg)
    if post.dim != state.system_dim:
        msg = f"post dim {post.dim} vs system dim {state.system_dim}"
        raise DimensionMismatchError(msg)

    amplitudes = np.array([np.vdot(post.amps, b.system.amps) for b in state.branches])
    weights = amplitudes.conj()[:, None] * amplitudes[None, :] * state.overlap_matrix()
    probability = float(np.sum(weights).real)
    if probability <= ZERO_NORM_ATOL:
        msg = f"Post-selected pointer norm {probability:.3e} is zero"
        raise OrthogonalPostSelectionError(msg)

    shifts = state.shift_matrix()
    sigmas = state.sigmas
    mid = (shifts[:, None, :] + shifts[None, :, :]) / 2.0
    diff = shifts[:, None, :] - shifts[None, :, :]

    mean_x = np.einsum("jk,jkp->p", weights, mid).real / probability
    mean_p = np.einsum("jk,jkp->p", weights, 1j * diff / (4.0 * sigmas**2)).real / probability
    corr = np.einsum("jk,jkp,jkq->pq", weights, mid, mid).real / probability
    corr = corr + np.diag(sigmas**2)

    logger.debug(
        "pointer_readout",
        branches=len(state.branches),
        pointers=len(state.pointers),
        postselection_probability=probability,
    )
    return PointerReadout(
        labels=[p.label for p in state.pointers],
        postselection_probability=min(probability, 1.0),
        mean_x=[float(v) + 0.0 for v in mean_x],
        mean_p=[float(v) + 0.0 for v in mean_p],
        corr_xx=[[float(v) + 0.0 for v in row] for row in corr],
    )
