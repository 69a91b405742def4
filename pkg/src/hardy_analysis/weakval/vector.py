"""The A12 vector operator and its factorization into single-photon observables.

A12 assigns the eigenvalue pair (level of photon 2, level of photon 1) to every
two-photon basis projector, where a photon's level is gamma on the
``gamma_label`` polarization and epsilon on the other one. Component 1 is
therefore A2 extended to the pair and component 2 is A1 extended.
"""

from __future__ import annotations

import numpy as np
import structlog

from hardy_analysis.weakval.ensemble import VectorOperator
from hardy_core.constants import ATOL, PHOTON_LABELS, TWO_PHOTON_LABELS
from hardy_core.exceptions import InvalidStateError, NotSeparableError
from hardy_core.qcore import (
    Operator,
    SpectralOperator,
    embed,
    hermitian_eig_2x2,
    ket,
    operator_partial_trace,
    projector,
    two_photon,
)

logger = structlog.get_logger()

# Photon index in each vector component: (A2, A1)
A12_SITES: tuple[int, int] = (2, 1)


def _check_label(gamma_label: str) -> None:
    if gamma_label not in PHOTON_LABELS:
        msg = f"gamma_label must be one of {PHOTON_LABELS}, got {gamma_label!r}"
        raise InvalidStateError(msg)


def single_photon_observable(
    gamma: float, epsilon: float, gamma_label: str = "V"
) -> SpectralOperator:
    """A_i = gamma |g><g| + epsilon |e><e| with g = ``gamma_label``."""
    _check_label(gamma_label)
    return SpectralOperator.diagonal(
        [gamma if label == gamma_label else epsilon for label in PHOTON_LABELS]
    )


def build_A12(gamma: float, epsilon: float, gamma_label: str = "V") -> VectorOperator:
    """Vector operator sum over |XY><XY| of (level(Y), level(X)), photon 1 written first."""
    _check_label(gamma_label)

    def level(polarization: str) -> float:
        return gamma if polarization == gamma_label else epsilon

    terms = {label: (level(label[1]), level(label[0])) for label in TWO_PHOTON_LABELS}
    projectors = [projector(two_photon(label)) for label in terms]
    components = tuple(
        SpectralOperator.from_pairs([pair[k] for pair in terms.values()], projectors)
        for k in range(2)
    )
    return VectorOperator(components, ("A2", "A1"))


def _spectral_2x2(op: Operator) -> SpectralOperator:
    """Spectral form of a Hermitian 2x2; diagonal input keeps the {H, V} order."""
    entries = op.entries
    if abs(entries[0, 1]) <= ATOL:
        return SpectralOperator.diagonal([entries[0, 0].real, entries[1, 1].real])
    (upper, lower), (top, bottom) = hermitian_eig_2x2(entries)
    return SpectralOperator.from_pairs(
        [upper, lower], [projector(ket(top)), projector(ket(bottom))]
    )


def _factor(component: Operator, site: int) -> Operator | None:
    reduced = 0.5 * operator_partial_trace(component, keep=site)
    single = Operator(reduced.entries, hermitian=True)
    if embed(single, site).allclose(component):
        return single
    return None


def decompose_A12(V: VectorOperator) -> tuple[SpectralOperator, SpectralOperator]:
    """Recover the single-photon observables (A2, A1) behind a two-component A12.

    Each component must equal a single-photon operator extended by the
    identity; component 1 is tried on photon 2 first and component 2 on
    photon 1 first, so multiples of the identity keep the A12 ordering.
    """
    if len(V.components) != 2 or V.dim != 4:
        msg = f"A12 has two 4x4 components, got {len(V.components)} of dim {V.dim}"
        raise NotSeparableError(msg)
    singles: list[SpectralOperator] = []
    for index, component in enumerate(V.dense()):
        preferred = A12_SITES[index]
        single = None
        for site in (preferred, 3 - preferred):
            single = _factor(component, site)
            if single is not None:
                break
        if single is None:
            msg = f"A12 component {index + 1} is not a single-photon operator"
            raise NotSeparableError(msg)
        singles.append(_spectral_2x2(single))
    logger.debug("a12_decomposed", eigenvalues=[s.eigenvalues for s in singles])
    return singles[0], singles[1]


def decomposition_residual(
    V: VectorOperator, singles: tuple[SpectralOperator, SpectralOperator]
) -> float:
    """Largest entrywise |component - extended single-photon operator|."""
    residual = 0.0
    for component, single, site in zip(V.dense(), singles, A12_SITES, strict=True):
        extended = embed(single.dense(), site)
        residual = max(residual, float(np.max(np.abs(component.entries - extended.entries))))
    return residual
