"""Operators, density matrices and spectral (eigenvalue/projector) observables."""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from hardy_core.constants import ATOL, POSITIVITY_ATOL
from hardy_core.exceptions import (
    DimensionMismatchError,
    InvalidDensityMatrixError,
    InvalidSpectralDecompositionError,
    InvalidStateError,
    NotHermitianError,
)
from hardy_core.qcore.states import ComplexArray, Ket, _frozen_array


def _hermiticity_defect(entries: ComplexArray) -> float:
    return float(np.max(np.abs(entries - entries.conj().T)))


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense square complex matrix; ``hermitian`` is validated when set."""

    entries: ComplexArray
    hermitian: bool = False

    def __post_init__(self) -> None:
        entries = _frozen_array(self.entries, ndim=2)
        if entries.shape[0] != entries.shape[1]:
            msg = f"Operator must be square, got shape {entries.shape}"
            raise DimensionMismatchError(msg)
        if self.hermitian and _hermiticity_defect(entries) > ATOL:
            msg = f"Operator flagged Hermitian deviates by {_hermiticity_defect(entries):.3e}"
            raise NotHermitianError(msg)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def _check_dim(self, other: Operator) -> None:
        if other.dim != self.dim:
            msg = f"Operator dims differ: {self.dim} vs {other.dim}"
            raise DimensionMismatchError(msg)

    def __add__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(self.entries + other.entries, self.hermitian and other.hermitian)

    def __sub__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(self.entries - other.entries, self.hermitian and other.hermitian)

    def __rmul__(self, scalar: complex) -> Operator:
        keeps_hermitian = self.hermitian and complex(scalar).imag == 0.0
        return Operator(scalar * self.entries, keeps_hermitian)

    def __matmul__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(self.entries @ other.entries)

    def allclose(self, other: Operator, atol: float = ATOL) -> bool:
        if self.dim != other.dim:
            return False
        return bool(np.allclose(self.entries, other.entries, atol=atol, rtol=0.0))


def identity(dim: int) -> Operator:
    return Operator(np.eye(dim, dtype=np.complex128), hermitian=True)


def projector(state: Ket) -> Operator:
    """Rank-1 projector |s><s| onto the normalized direction of ``state``."""
    unit = state.normalize()
    return Operator(np.outer(unit.amps, unit.amps.conj()), hermitian=True)


def hermitian_eig_2x2(
    matrix: npt.ArrayLike,
) -> tuple[tuple[float, float], tuple[ComplexArray, ComplexArray]]:
    """Closed-form eigen-decomposition of a 2x2 Hermitian matrix.

    Returns eigenvalues in descending order and the matching unit eigenvectors.
    A degenerate spectrum (splitting <= ATOL) returns the {H, V} basis. Each
    eigenvector has its first non-negligible component real and positive.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        msg = f"Expected a 2x2 matrix, got shape {m.shape}"
        raise DimensionMismatchError(msg)
    a = float(m[0, 0].real)
    d = float(m[1, 1].real)
    b = complex(m[0, 1])
    mean = (a + d) / 2.0
    half_split = math.hypot((a - d) / 2.0, abs(b))
    upper, lower = mean + half_split, mean - half_split

    if 2.0 * half_split <= ATOL:
        e0 = np.array([1.0, 0.0], dtype=np.complex128)
        e1 = np.array([0.0, 1.0], dtype=np.complex128)
        return (upper, lower), (e0, e1)

    # Two algebraically equivalent candidates; keep the better conditioned one.
    cand_a = np.array([b, upper - a], dtype=np.complex128)
    cand_b = np.array([upper - d, b.conjugate()], dtype=np.complex128)
    top = cand_a if np.linalg.norm(cand_a) >= np.linalg.norm(cand_b) else cand_b
    top = _fix_phase(top / np.linalg.norm(top))
    bottom = _fix_phase(np.array([-top[1].conjugate(), top[0].conjugate()]))
    return (upper, lower), (top, bottom)


def _fix_phase(vec: ComplexArray) -> ComplexArray:
    """Rotate the global phase so the first non-negligible entry is real positive."""
    for value in vec:
        if abs(value) > ATOL:
            return np.asarray(vec * (abs(value) / value), dtype=np.complex128)
    return vec


def _elementary_symmetric_minors(entries: ComplexArray) -> list[float]:
    """Sums of k x k principal minors, k = 1..n (characteristic-polynomial coefficients)."""
    n = entries.shape[0]
    sums: list[float] = []
    for k in range(1, n + 1):
        total = 0.0
        for rows in itertools.combinations(range(n), k):
            sub = entries[np.ix_(rows, rows)]
            total += float(np.linalg.det(sub).real)
        sums.append(total)
    return sums


def _min_eigenvalue_ok(entries: ComplexArray) -> bool:
    dim = entries.shape[0]
    if dim == 1:
        return float(entries[0, 0].real) >= -POSITIVITY_ATOL
    if dim == 2:
        (_, lowest), _ = hermitian_eig_2x2(entries)
        return lowest >= -POSITIVITY_ATOL
    if dim <= 4:
        # Hermitian: all eigenvalues >= 0 iff every elementary symmetric sum is >= 0
        return all(s >= -POSITIVITY_ATOL for s in _elementary_symmetric_minors(entries))
    return float(np.linalg.eigvalsh(entries).min()) >= -POSITIVITY_ATOL


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix."""

    entries: ComplexArray

    def __post_init__(self) -> None:
        entries = _frozen_array(self.entries, ndim=2)
        if entries.shape[0] != entries.shape[1]:
            msg = f"Density matrix must be square, got shape {entries.shape}"
            raise InvalidDensityMatrixError(msg)
        defect = _hermiticity_defect(entries)
        if defect > ATOL:
            msg = f"Density matrix not Hermitian (defect {defect:.3e})"
            raise InvalidDensityMatrixError(msg)
        trace = complex(np.trace(entries))
        if abs(trace - 1.0) > ATOL:
            msg = f"Density matrix trace {trace} != 1"
            raise InvalidDensityMatrixError(msg)
        if not _min_eigenvalue_ok(entries):
            msg = "Density matrix has a negative eigenvalue"
            raise InvalidDensityMatrixError(msg)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_ket(cls, state: Ket) -> DensityMatrix:
        """Pure state |s><s|; the ket must already be normalized."""
        if not state.is_normalized:
            msg = f"Pure-state density matrix needs a normalized ket (norm {state.norm:.15f})"
            raise InvalidStateError(msg)
        return cls(np.outer(state.amps, state.amps.conj()))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def as_operator(self) -> Operator:
        return Operator(self.entries, hermitian=True)

    def purity(self) -> float:
        """Tr rho^2."""
        return float(np.trace(self.entries @ self.entries).real)

    def fidelity(self, target: Ket) -> float:
        """<t|rho|t> against a pure target."""
        amps = target.amps
        return float((amps.conj() @ self.entries @ amps).real)

    def max_offdiagonal(self) -> float:
        off = self.entries - np.diag(np.diag(self.entries))
        return float(np.max(np.abs(off)))


@dataclass(frozen=True, eq=False)
class SpectralOperator:
    """Hermitian observable held as (eigenvalue, projector) branches.

    Eigenvalues need not be distinct; the projectors must be idempotent,
    mutually orthogonal and sum to the identity.
    """

    branches: tuple[tuple[float, Operator], ...]

    def __post_init__(self) -> None:
        branches = tuple((float(value), proj) for value, proj in self.branches)
        if not branches:
            msg = "A spectral operator needs at least one branch"
            raise InvalidSpectralDecompositionError(msg)
        dim = branches[0][1].dim
        if any(proj.dim != dim for _, proj in branches):
            msg = "All projectors must share one dimension"
            raise DimensionMismatchError(msg)
        total = np.zeros((dim, dim), dtype=np.complex128)
        for i, (_, p) in enumerate(branches):
            if not np.allclose(p.entries @ p.entries, p.entries, atol=ATOL, rtol=0.0):
                msg = f"Branch {i} projector is not idempotent"
                raise InvalidSpectralDecompositionError(msg)
            for j in range(i + 1, len(branches)):
                q = branches[j][1]
                if not np.allclose(p.entries @ q.entries, 0.0, atol=ATOL, rtol=0.0):
                    msg = f"Branch projectors {i} and {j} are not orthogonal"
                    raise InvalidSpectralDecompositionError(msg)
            total += p.entries
        if not np.allclose(total, np.eye(dim), atol=ATOL, rtol=0.0):
            msg = "Branch projectors do not sum to the identity"
            raise InvalidSpectralDecompositionError(msg)
        object.__setattr__(self, "branches", branches)

    @classmethod
    def from_pairs(
        cls, values: Sequence[float], projectors: Sequence[Operator]
    ) -> SpectralOperator:
        if len(values) != len(projectors):
            msg = f"{len(values)} eigenvalues for {len(projectors)} projectors"
            raise InvalidSpectralDecompositionError(msg)
        return cls(tuple(zip(values, projectors, strict=True)))

    @classmethod
    def projective(cls, proj: Operator) -> SpectralOperator:
        """Two-outcome observable with eigenvalue 1 on ``proj`` and 0 elsewhere."""
        return cls(((1.0, proj), (0.0, identity(proj.dim) - proj)))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> SpectralOperator:
        """Observable diagonal in the computational basis."""
        dim = len(values)
        branches = []
        for i, value in enumerate(values):
            p = np.zeros((dim, dim), dtype=np.complex128)
            p[i, i] = 1.0
            branches.append((float(value), Operator(p, hermitian=True)))
        return cls(tuple(branches))

    @property
    def dim(self) -> int:
        return self.branches[0][1].dim

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        return tuple(value for value, _ in self.branches)

    def dense(self) -> Operator:
        """Sum of eigenvalue * projector."""
        total = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for value, proj in self.branches:
            total += value * proj.entries
        return Operator(total, hermitian=True)
