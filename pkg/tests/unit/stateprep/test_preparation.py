"""Tests for stateprep/preparation.py: flawed versus Schmidt-form preparation."""

from __future__ import annotations

import math

import numpy as np
import pytest

from hardy_analysis.stateprep import (
    WHICH_PATH_RECORD,
    compare_preps,
    flawed_joint_state,
    simulate_correct_prep,
    simulate_flawed_prep,
)
from hardy_core.qcore import apply, tensor, two_photon
from tests.mocks.mock_factories import random_two_photon_ket, random_unitary

FLAWED_RHO = np.diag([1.0, 1.0, 1.0, 0.0]).astype(np.complex128) / 3.0


@pytest.mark.unit
class TestFlawedPreparation:
    """The which-path-recording apparatus yields a mixture."""

    def test_joint_state(self) -> None:
        """Each term is paired with its own environment record."""
        joint = flawed_joint_state()
        assert joint.dim == 12
        assert joint.is_normalized
        nonzero = np.flatnonzero(np.abs(joint.amps) > 0.0)
        assert nonzero.tolist() == [0, 4, 8]
        assert WHICH_PATH_RECORD == {"HH": "e0", "HV": "e1", "VH": "e2"}

    def test_density_matrix(self) -> None:
        """rho = (|HH><HH| + |HV><HV| + |VH><VH|) / 3 entrywise."""
        outcome = simulate_flawed_prep()
        np.testing.assert_allclose(outcome.state.entries, FLAWED_RHO, atol=1e-15, rtol=0.0)

    def test_figures_of_merit(self) -> None:
        """Fidelity and purity 1/3, no coherence."""
        outcome = simulate_flawed_prep()
        assert outcome.procedure == "flawed"
        assert outcome.fidelity_with_target == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert outcome.purity == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert outcome.coherence_offdiag_max == pytest.approx(0.0, abs=1e-15)

    def test_serialized_form(self) -> None:
        """The dump carries the matrix as [re, im] pairs, not the raw object."""
        dumped = simulate_flawed_prep().model_dump()
        assert "state" not in dumped
        assert np.asarray(dumped["density_matrix"]).shape == (4, 4, 2)


@pytest.mark.unit
class TestCorrectPreparation:
    """Schmidt-form preparation reproduces the pure target."""

    def test_hardy_target(self) -> None:
        """Pure, with full fidelity and the target's coherences."""
        outcome = simulate_correct_prep()
        assert outcome.procedure == "correct"
        assert outcome.fidelity_with_target >= 1.0 - 1e-12
        assert outcome.purity == pytest.approx(1.0, abs=1e-12)
        assert outcome.coherence_offdiag_max == pytest.approx(1.0 / 3.0, abs=1e-12)

    def test_random_targets(self, rng: np.random.Generator) -> None:
        """Any two-photon target is reached."""
        for _ in range(50):
            outcome = simulate_correct_prep(random_two_photon_ket(rng))
            assert outcome.fidelity_with_target >= 1.0 - 1e-12

    @pytest.mark.parametrize("b", [1e-5, 1e-9, 1e-11])
    def test_nearly_product_targets(self, rng: np.random.Generator, b: float) -> None:
        """Targets one local rotation away from a|HH> + b|VV> with tiny b are reached."""
        source = two_photon("HH").scaled(math.sqrt(1.0 - b * b)) + two_photon("VV").scaled(b)
        target = apply(tensor(random_unitary(rng), random_unitary(rng)), source)
        comparison = compare_preps(target)
        assert comparison.correct.fidelity_with_target >= 1.0 - 1e-12
        assert comparison.schmidt.b == pytest.approx(b, rel=1e-3, abs=1e-12)


@pytest.mark.unit
class TestComparePreps:
    """Side-by-side comparison."""

    def test_hardy(self) -> None:
        """Flawed is unsuitable; the Hardy weak table is attached as context."""
        comparison = compare_preps()
        assert not comparison.flawed_suitable
        assert comparison.context_table is not None
        assert comparison.context_table.min_joint == pytest.approx(-1.0, abs=1e-12)
        third = 1.0 / math.sqrt(3.0)
        np.testing.assert_allclose(
            comparison.target, [[third, 0.0], [third, 0.0], [third, 0.0], [0.0, 0.0]], atol=1e-15
        )
        assert comparison.schmidt.b_squared == pytest.approx(
            (3.0 - math.sqrt(5.0)) / 6.0, abs=1e-12
        )

    def test_other_target(self, rng: np.random.Generator) -> None:
        """Non-Hardy targets get no weak-value context."""
        target = random_two_photon_ket(rng)
        comparison = compare_preps(target)
        assert comparison.context_table is None
        assert comparison.correct.fidelity_with_target >= 1.0 - 1e-12
        expected = float(np.real(np.vdot(target.amps, FLAWED_RHO @ target.amps)))
        assert comparison.flawed.fidelity_with_target == pytest.approx(expected, abs=1e-12)

    def test_dump_includes_computed_fields(self) -> None:
        """flawed_suitable is part of the serialized comparison."""
        dumped = compare_preps().model_dump(mode="python")
        assert dumped["flawed_suitable"] is False
        assert set(dumped) >= {"target", "flawed", "correct", "schmidt", "context_table"}
