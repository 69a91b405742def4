"""Tests for pointer/readout.py: closed-form post-selected moments."""

from __future__ import annotations

import numpy as np
import pytest

from hardy_analysis.hardy import HardyScenario
from hardy_analysis.pointer import couple, prepare, readout
from hardy_analysis.weakval import weak_value
from hardy_core.constants import IMAG_READOUT_COEFFICIENT
from hardy_core.exceptions import (
    DimensionMismatchError,
    InvalidStateError,
    OrthogonalPostSelectionError,
)
from hardy_core.qcore import Ket, embed, inner, ket, photon, two_photon
from tests.mocks.mock_factories import (
    make_pointer_config,
    random_nearby_ensemble,
    random_photon_observable,
    random_unitary,
)


@pytest.mark.unit
class TestReadout:
    """Moments of post-selected pointers."""

    def test_no_pointers(self, hardy: HardyScenario) -> None:
        """Without pointers only the post-selection probability is reported."""
        result = readout(prepare(hardy.pre), hardy.post)
        assert result.postselection_probability == pytest.approx(1.0 / 12.0, abs=1e-12)
        assert result.labels == []
        assert result.corr_xx == []

    def test_hardy_inner_projector_is_exact(self, hardy: HardyScenario) -> None:
        """Only the shifted branch survives, so <x> = g and <x^2> = g^2 + sigma^2."""
        g, sigma = 0.3, 1.5
        cfg = make_pointer_config(g=g, sigma=sigma, label="P_V1")
        state = couple(prepare(hardy.pre), hardy.single_projector("V", 1), cfg)
        result = readout(state, hardy.post)
        assert result.labels == ["P_V1"]
        assert result.mean_x[0] == pytest.approx(g, abs=1e-12)
        assert result.mean_p[0] == pytest.approx(0.0, abs=1e-12)
        assert result.corr_xx[0][0] == pytest.approx(g**2 + sigma**2, abs=1e-12)

    def test_weak_limit_matches_weak_value(self, rng: np.random.Generator) -> None:
        """<x>/g -> Re<A>_w and <p> sigma^2 / g -> k Im<A>_w as g -> 0."""
        g, sigma = 1e-3, 1.0
        for _ in range(10):
            e = random_nearby_ensemble(rng, 2)
            obs = random_photon_observable(rng)
            w = weak_value(e, obs).value
            cfg = make_pointer_config(g=g, sigma=sigma)
            result = readout(couple(prepare(e.pre), obs, cfg), e.post)
            assert result.mean_x[0] / g == pytest.approx(w.real, abs=1e-5)
            assert result.mean_p[0] * sigma**2 / g == pytest.approx(
                IMAG_READOUT_COEFFICIENT * w.imag, abs=1e-5
            )

    def test_correlations_symmetric(self, hardy: HardyScenario) -> None:
        """Two pointers give a symmetric 2x2 correlation matrix."""
        state = prepare(hardy.pre)
        state = couple(state, hardy.single_projector("H", 1), make_pointer_config(g=0.2, label="a"))
        state = couple(state, hardy.single_projector("H", 2), make_pointer_config(g=0.2, label="b"))
        result = readout(state, hardy.post)
        assert result.corr_xx[0][1] == pytest.approx(result.corr_xx[1][0], abs=1e-15)

    def test_orthogonal_post_selection(self) -> None:
        """Zero post-selected norm raises OrthogonalPostSelectionError."""
        with pytest.raises(OrthogonalPostSelectionError):
            readout(prepare(two_photon("HH")), two_photon("VV"))

    def test_post_validation(self, hardy: HardyScenario) -> None:
        """post must be normalized and match the system dimension."""
        with pytest.raises(InvalidStateError):
            readout(prepare(photon("H")), ket([1.0, 1.0]))
        with pytest.raises(DimensionMismatchError):
            readout(prepare(hardy.pre), photon("H"))


@pytest.mark.unit
class TestConservation:
    """Probability bookkeeping across a complete post-selection basis."""

    @pytest.mark.parametrize("g", [0.0, 0.05, 1.0, 20.0])
    def test_probabilities_sum_to_one(self, rng: np.random.Generator, g: float) -> None:
        """sum_k P(post = b_k) = 1 for any orthonormal basis {b_k} and any g."""
        for _ in range(5):
            e = random_nearby_ensemble(rng, 4)
            state = prepare(e.pre)
            for site in (1, 2):
                obs = embed(random_photon_observable(rng), site)
                state = couple(state, obs, make_pointer_config(g=g, label=f"p{site}"))
            basis = random_unitary(rng, 4).entries
            total = sum(
                readout(state, Ket(basis[:, k])).postselection_probability for k in range(4)
            )
            assert total == pytest.approx(1.0, abs=1e-12)

    def test_zero_coupling_is_inert(self, rng: np.random.Generator) -> None:
        """g = 0 leaves pointers centred and P(post) = |<post|pre>|^2."""
        for _ in range(10):
            e = random_nearby_ensemble(rng, 2)
            cfg = make_pointer_config(g=0.0, sigma=0.7)
            state = couple(prepare(e.pre), random_photon_observable(rng), cfg)
            assert len(state.branches) == 1
            assert state.branches[0].shifts == (0.0,)
            result = readout(state, e.post)
            assert result.mean_x[0] == pytest.approx(0.0, abs=1e-15)
            assert result.mean_p[0] == pytest.approx(0.0, abs=1e-15)
            assert result.postselection_probability == pytest.approx(
                abs(inner(e.post, e.pre)) ** 2, abs=1e-12
            )
