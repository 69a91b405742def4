"""Closed-form Schmidt decomposition of two-photon pure states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import structlog

from hardy_core.constants import ATOL
from hardy_core.exceptions import DimensionMismatchError, InvalidStateError
from hardy_core.models import SchmidtSummary
from hardy_core.qcore import (
    DensityMatrix,
    Ket,
    Operator,
    apply,
    complex_pairs,
    hermitian_eig_2x2,
    identity,
    partial_trace,
    tensor,
    two_photon,
)

logger = structlog.get_logger()

PHASE_CONVENTION = (
    "schmidt coefficients real, nonnegative and descending; each photon-1 basis vector has "
    "its first non-negligible entry real positive; degenerate spectra use the {H, V} basis"
)


def _is_unitary(op: Operator) -> bool:
    return (Operator(op.entries.conj().T) @ op).allclose(identity(op.dim))


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """target = (U1 (x) U2)(a|HH> + b|VV>); columns of U1, U2 are the local Schmidt bases."""

    a: float
    b: float
    local_rotation_1: Operator
    local_rotation_2: Operator
    phase_convention: str = PHASE_CONVENTION

    def __post_init__(self) -> None:
        if self.a < 0.0 or self.b < 0.0 or self.a < self.b - ATOL:
            msg = f"Schmidt coefficients must satisfy a >= b >= 0, got ({self.a}, {self.b})"
            raise InvalidStateError(msg)
        if abs(self.a**2 + self.b**2 - 1.0) > ATOL:
            msg = f"a^2 + b^2 = {self.a**2 + self.b**2}, not 1"
            raise InvalidStateError(msg)
        for name, rotation in (("U1", self.local_rotation_1), ("U2", self.local_rotation_2)):
            if rotation.dim != 2 or not _is_unitary(rotation):
                msg = f"{name} is not a 2x2 unitary"
                raise InvalidStateError(msg)

    def source_state(self) -> Ket:
        """a|HH> + b|VV>, the state emitted before the local rotations."""
        return two_photon("HH").scaled(self.a) + two_photon("VV").scaled(self.b)

    def reconstruct(self) -> Ket:
        """(U1 (x) U2)(a|HH> + b|VV>)."""
        rotation = tensor(self.local_rotation_1, self.local_rotation_2)
        return apply(rotation, self.source_state())

    def to_summary(self) -> SchmidtSummary:
        return SchmidtSummary(
            a=self.a,
            b=self.b,
            a_squared=self.a**2,
            b_squared=self.b**2,
            local_rotation_1=complex_pairs(self.local_rotation_1.entries),
            local_rotation_2=complex_pairs(self.local_rotation_2.entries),
            phase_convention=self.phase_convention,
        )


def schmidt_decompose(target: Ket) -> SchmidtForm:
    """Schmidt form of a normalized two-photon ket.

    The photon-1 basis diagonalizes the reduced state Tr_2 |t><t| in closed
    form; projecting the target on each basis vector gives the matching
    photon-2 vector with norm equal to its Schmidt coefficient.
    """
    if target.dim != 4:
        msg = f"Schmidt decomposition needs a two-photon (4-dim) ket, got dim {target.dim}"
        raise DimensionMismatchError(msg)
    if not target.is_normalized:
        msg = f"Target must be normalized (norm {target.norm:.15f})"
        raise InvalidStateError(msg)

    reduced = partial_trace(DensityMatrix.from_ket(target), keep=1)
    _, (u0, u1) = hermitian_eig_2x2(reduced.entries)
    amplitudes = np.asarray(target.amps).reshape(2, 2)
    proj0 = u0.conj() @ amplitudes
    proj1 = u1.conj() @ amplitudes
    a, b = float(np.linalg.norm(proj0)), float(np.linalg.norm(proj1))
    if b > a + ATOL:
        # Rounding can swap the projected norms; ties keep the eigensolver's {H, V} order.
        u0, u1, proj0, proj1, a, b = u1, u0, proj1, proj0, b, a

    w0 = proj0 / a
    # w1 is the exact complement of w0; proj1 only fixes its phase.
    w1 = np.array([-w0[1].conjugate(), w0[0].conjugate()])
    along = complex(np.vdot(w1, proj1))
    if b > ATOL and abs(along) > 0.0:
        w1 = w1 * (along / abs(along))

    form = SchmidtForm(
        a=a,
        b=b,
        local_rotation_1=Operator(np.column_stack([u0, u1])),
        local_rotation_2=Operator(np.column_stack([w0, w1])),
    )
    logger.debug("schmidt_decomposed", a=a, b=b, degenerate=math.isclose(a, b, abs_tol=ATOL))
    return form
