"""System (x) Gaussian-pointer states as finite superpositions of shifted Gaussians.

Each pointer starts in psi0(x) = (2 pi sigma^2)^(-1/4) exp(-x^2 / 4 sigma^2).
Coupling exp(-i g A (x) p) translates the pointer by g * a on the eigenbranch
with eigenvalue a, so the joint state stays a sum of branches, each holding
an (unnormalized) system vector and one shift per attached pointer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import structlog

from hardy_core.constants import ATOL, BRANCH_DROP_ATOL
from hardy_core.exceptions import DimensionMismatchError, InvalidStateError
from hardy_core.models import PointerConfig
from hardy_core.qcore import Ket, SpectralOperator, apply

logger = structlog.get_logger()

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class Branch:
    """System component paired with the center of every attached pointer."""

    system: Ket
    shifts: tuple[float, ...]


def gaussian_overlap(u: float | FloatArray, v: float | FloatArray, sigma: float) -> FloatArray:
    """<psi0(x - u)|psi0(x - v)> = exp(-(u - v)^2 / (8 sigma^2))."""
    diff = np.asarray(u, dtype=np.float64) - np.asarray(v, dtype=np.float64)
    return np.asarray(np.exp(-(diff**2) / (8.0 * sigma**2)), dtype=np.float64)


@dataclass(frozen=True, eq=False)
class GaussianBranchState:
    """Joint system (x) pointers state; pointers listed in coupling order."""

    branches: tuple[Branch, ...]
    pointers: tuple[PointerConfig, ...] = ()

    def __post_init__(self) -> None:
        branches = tuple(self.branches)
        pointers = tuple(self.pointers)
        if not branches:
            msg = "A pointer state needs at least one branch"
            raise InvalidStateError(msg)
        dim = branches[0].system.dim
        for branch in branches:
            if branch.system.dim != dim:
                msg = "All branches must share one system dimension"
                raise DimensionMismatchError(msg)
            if len(branch.shifts) != len(pointers):
                msg = f"Branch carries {len(branch.shifts)} shifts for {len(pointers)} pointers"
                raise DimensionMismatchError(msg)
        object.__setattr__(self, "branches", branches)
        object.__setattr__(self, "pointers", pointers)
        norm = self.norm_squared()
        if norm > 1.0 + ATOL:
            msg = f"Pointer state norm {norm} exceeds 1"
            raise InvalidStateError(msg)

    @property
    def system_dim(self) -> int:
        return self.branches[0].system.dim

    @property
    def sigmas(self) -> FloatArray:
        return np.array([p.sigma for p in self.pointers], dtype=np.float64)

    def shift_matrix(self) -> FloatArray:
        """Pointer centers, one row per branch."""
        rows = [b.shifts for b in self.branches]
        return np.array(rows, dtype=np.float64).reshape(len(rows), len(self.pointers))

    def overlap_matrix(self) -> FloatArray:
        """prod_p <branch j pointer p | branch k pointer p>, shape (n, n)."""
        shifts = self.shift_matrix()
        total = np.ones((len(self.branches), len(self.branches)), dtype=np.float64)
        for p, sigma in enumerate(self.sigmas):
            total *= gaussian_overlap(shifts[:, None, p], shifts[None, :, p], float(sigma))
        return total

    def norm_squared(self) -> float:
        """sum_jk <s_j|s_k> prod_p overlap(u_jp, u_kp)."""
        systems = np.array([b.system.amps for b in self.branches])
        gram = systems.conj() @ systems.T
        return float(np.sum(gram * self.overlap_matrix()).real)


def prepare(pre: Ket) -> GaussianBranchState:
    """Pointer-free state holding the normalized pre-selected system."""
    if not pre.is_normalized:
        msg = f"Pre-selected state must be normalized (norm {pre.norm:.15f})"
        raise InvalidStateError(msg)
    return GaussianBranchState((Branch(pre, ()),))


def couple(
    state: GaussianBranchState, obs: SpectralOperator, cfg: PointerConfig
) -> GaussianBranchState:
    """Attach a fresh pointer and entangle it with ``obs`` at strength ``cfg.g``.

    Branches that share every shift are merged; branches whose system part
    vanishes are dropped. Exact at any coupling strength.
    """
    if obs.dim != state.system_dim:
        msg = f"Observable dim {obs.dim} vs system dim {state.system_dim}"
        raise DimensionMismatchError(msg)
    merged: dict[tuple[float, ...], Ket] = {}
    for branch in state.branches:
        for value, proj in obs.branches:
            part = apply(proj, branch.system)
            if part.norm**2 < BRANCH_DROP_ATOL:
                continue
            shifts = (*branch.shifts, cfg.g * value + 0.0)
            merged[shifts] = merged[shifts] + part if shifts in merged else part
    coupled = GaussianBranchState(
        tuple(Branch(system, shifts) for shifts, system in merged.items()),
        (*state.pointers, cfg),
    )
    logger.debug(
        "pointer_coupled",
        label=cfg.label,
        g=cfg.g,
        sigma=cfg.sigma,
        branches=len(coupled.branches),
    )
    return coupled
