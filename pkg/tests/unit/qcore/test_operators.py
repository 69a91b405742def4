"""Tests for qcore/operators.py."""

from __future__ import annotations

import math

import numpy as np
import pytest

from hardy_core.exceptions import (
    DimensionMismatchError,
    InvalidDensityMatrixError,
    InvalidSpectralDecompositionError,
    InvalidStateError,
    NotHermitianError,
)
from hardy_core.qcore import (
    DensityMatrix,
    Operator,
    SpectralOperator,
    hermitian_eig_2x2,
    identity,
    ket,
    photon,
    projector,
)


@pytest.mark.unit
class TestOperator:
    """Dense operators and their arithmetic."""

    def test_square_required(self) -> None:
        """Non-square matrices raise DimensionMismatchError."""
        with pytest.raises(DimensionMismatchError):
            Operator(np.zeros((2, 3)))

    def test_hermitian_flag_is_checked(self) -> None:
        """Flagging a non-Hermitian matrix raises NotHermitianError."""
        with pytest.raises(NotHermitianError):
            Operator(np.array([[0.0, 1.0], [0.0, 0.0]]), hermitian=True)

    def test_linear_combinations(self) -> None:
        """+, -, scalar * and @ behave like matrix algebra."""
        p = projector(photon("H"))
        q = projector(photon("V"))
        assert (p + q).allclose(identity(2))
        assert (identity(2) - p).allclose(q)
        assert (p @ q).allclose(Operator(np.zeros((2, 2))))
        scaled = 2.0 * p
        assert scaled.hermitian
        assert not (1j * p).hermitian

    def test_dim_mismatch(self) -> None:
        """Arithmetic across dimensions is rejected; allclose just says no."""
        with pytest.raises(DimensionMismatchError):
            _ = identity(2) + identity(4)
        assert not identity(2).allclose(identity(4))

    def test_projector_normalizes(self) -> None:
        """projector() uses the normalized direction."""
        p = projector(ket([1.0, 1.0]))
        np.testing.assert_allclose(p.entries, 0.5 * np.ones((2, 2)), atol=1e-15)


@pytest.mark.unit
class TestHermitianEig2x2:
    """Closed-form 2x2 eigen-decomposition."""

    def test_matches_numpy(self, rng: np.random.Generator) -> None:
        """Eigenvalues agree with eigvalsh and vectors satisfy M v = lambda v."""
        for _ in range(50):
            a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            m = a + a.conj().T
            (upper, lower), (top, bottom) = hermitian_eig_2x2(m)
            expected = np.linalg.eigvalsh(m)
            assert upper == pytest.approx(expected[1], abs=1e-12)
            assert lower == pytest.approx(expected[0], abs=1e-12)
            np.testing.assert_allclose(m @ top, upper * top, atol=1e-12)
            np.testing.assert_allclose(m @ bottom, lower * bottom, atol=1e-12)
            assert abs(np.vdot(top, bottom)) < 1e-12

    def test_degenerate_returns_hv_basis(self) -> None:
        """A multiple of the identity yields the {H, V} basis."""
        (upper, lower), (top, bottom) = hermitian_eig_2x2(3.0 * np.eye(2))
        assert upper == lower == 3.0
        np.testing.assert_array_equal(top, [1.0, 0.0])
        np.testing.assert_array_equal(bottom, [0.0, 1.0])

    def test_phase_convention(self) -> None:
        """First non-negligible entry of each eigenvector is real positive."""
        m = np.array([[1.0, 1j], [-1j, 2.0]])
        _, vectors = hermitian_eig_2x2(m)
        for vec in vectors:
            first = next(v for v in vec if abs(v) > 1e-12)
            assert first.imag == pytest.approx(0.0, abs=1e-15)
            assert first.real > 0.0

    def test_shape_checked(self) -> None:
        """Only 2x2 input is accepted."""
        with pytest.raises(DimensionMismatchError):
            hermitian_eig_2x2(np.eye(3))


@pytest.mark.unit
class TestDensityMatrix:
    """Density-matrix validation and figures of merit."""

    def test_pure_state(self) -> None:
        """A pure state has purity 1 and unit fidelity with itself."""
        plus = ket([1.0, 1.0]).normalize()
        rho = DensityMatrix.from_ket(plus)
        assert rho.purity() == pytest.approx(1.0, abs=1e-12)
        assert rho.fidelity(plus) == pytest.approx(1.0, abs=1e-12)
        assert rho.max_offdiagonal() == pytest.approx(0.5, abs=1e-12)

    def test_maximally_mixed(self) -> None:
        """I/2 has purity 1/2 and no coherence."""
        rho = DensityMatrix(np.eye(2) / 2.0)
        assert rho.purity() == pytest.approx(0.5)
        assert rho.max_offdiagonal() == 0.0

    @pytest.mark.parametrize(
        "entries",
        [
            np.array([[0.5, 0.0], [0.0, 0.6]]),
            np.array([[0.5, 0.1], [0.2, 0.5]]),
            np.array([[1.5, 0.0], [0.0, -0.5]]),
        ],
        ids=["trace", "hermitian", "positive"],
    )
    def test_invalid(self, entries: np.ndarray) -> None:
        """Trace, Hermiticity and positivity are all enforced."""
        with pytest.raises(InvalidDensityMatrixError):
            DensityMatrix(entries)

    def test_negative_eigenvalue_in_4x4(self) -> None:
        """Positivity is checked for two-photon matrices too."""
        entries = np.diag([0.6, 0.6, 0.1, -0.3]).astype(np.complex128)
        with pytest.raises(InvalidDensityMatrixError, match="negative"):
            DensityMatrix(entries)

    def test_from_ket_requires_normalized(self) -> None:
        """from_ket rejects unnormalized kets."""
        with pytest.raises(InvalidStateError):
            DensityMatrix.from_ket(ket([1.0, 1.0]))


@pytest.mark.unit
class TestSpectralOperator:
    """Eigenvalue/projector observables."""

    def test_projective(self) -> None:
        """projective() has eigenvalues (1, 0) and densifies to the projector."""
        p = projector(photon("V"))
        obs = SpectralOperator.projective(p)
        assert obs.eigenvalues == (1.0, 0.0)
        assert obs.dense().allclose(p)

    def test_diagonal(self) -> None:
        """diagonal() follows the computational basis order."""
        obs = SpectralOperator.diagonal([2.0, -1.0])
        np.testing.assert_allclose(obs.dense().entries, np.diag([2.0, -1.0]))

    def test_incomplete_projectors(self) -> None:
        """Projectors must sum to the identity."""
        with pytest.raises(InvalidSpectralDecompositionError, match="identity"):
            SpectralOperator(((1.0, projector(photon("H"))),))

    def test_non_orthogonal_projectors(self) -> None:
        """Overlapping projectors are rejected."""
        diag = projector(ket([1.0, 1.0]))
        with pytest.raises(InvalidSpectralDecompositionError):
            SpectralOperator(((1.0, projector(photon("H"))), (0.0, diag)))

    def test_non_idempotent(self) -> None:
        """A branch that is not a projector is rejected."""
        with pytest.raises(InvalidSpectralDecompositionError, match="idempotent"):
            SpectralOperator(((1.0, identity(2) + identity(2)),))

    def test_from_pairs_length(self) -> None:
        """Eigenvalue and projector counts must agree."""
        with pytest.raises(InvalidSpectralDecompositionError):
            SpectralOperator.from_pairs([1.0], [projector(photon("H")), projector(photon("V"))])

    def test_repeated_eigenvalues_allowed(self) -> None:
        """Degenerate spectra are fine."""
        obs = SpectralOperator.from_pairs(
            [math.pi, math.pi], [projector(photon("H")), projector(photon("V"))]
        )
        assert obs.dense().allclose(math.pi * identity(2))
