"""The Hardy pre/post-selected two-photon scenario.

Each photon's interferometer path is encoded in polarization: one polarization
marks the inner arm, the other the outer arm. The pre-selected state has
no amplitude for both photons in the inner arms (they would annihilate):

    |pre> = (|oo> + |oi> + |io>) / sqrt(3)

The paradoxical post-selection finds both photons at their dark ports,
(|i> - |o>) / sqrt(2) per photon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

import structlog

from hardy_analysis.weakval import PrePostEnsemble
from hardy_core.constants import PHOTON_LABELS
from hardy_core.qcore import Ket, SpectralOperator, embed, photon, projector, tensor, two_photon

logger = structlog.get_logger()


class Convention(StrEnum):
    """Which polarization encodes the inner interferometer arm."""

    V_INNER = "v-inner"
    H_INNER = "h-inner"


class PostSelection(StrEnum):
    """Final detection event the ensemble is conditioned on."""

    DARK = "dark"  # both interaction-free measurements positive
    BRIGHT = "bright"
    INNER = "inner"  # both photons found in the inner arms; never happens


def arm_labels(convention: Convention) -> tuple[str, str]:
    """(inner, outer) polarization labels."""
    if convention is Convention.V_INNER:
        return "V", "H"
    return "H", "V"


def hardy_pre_state(convention: Convention = Convention.V_INNER) -> Ket:
    inner, outer = arm_labels(convention)
    total = two_photon(outer + outer) + two_photon(outer + inner) + two_photon(inner + outer)
    return total.scaled(1.0 / math.sqrt(3.0))


def hardy_post_state(
    convention: Convention = Convention.V_INNER, post: PostSelection = PostSelection.DARK
) -> Ket:
    inner, outer = arm_labels(convention)
    if post is PostSelection.INNER:
        return two_photon(inner + inner)
    sign = -1.0 if post is PostSelection.DARK else 1.0
    port = (photon(inner) + photon(outer).scaled(sign)).scaled(1.0 / math.sqrt(2.0))
    return tensor(port, port)


@dataclass(frozen=True, eq=False)
class HardyScenario:
    """Pre/post-selected Hardy ensemble with its arm projectors.

    Projector keys: joint 'P_VV', 'P_VH', 'P_HV', 'P_HH' (photon 1 first) and
    single-photon 'P_V1', 'P_H1', 'P_V2', 'P_H2', all on the two-photon space.
    """

    convention: Convention
    post_selection: PostSelection
    ensemble: PrePostEnsemble
    projectors: dict[str, SpectralOperator]

    @property
    def pre(self) -> Ket:
        return self.ensemble.pre

    @property
    def post(self) -> Ket:
        return self.ensemble.post

    @property
    def inner_label(self) -> str:
        return arm_labels(self.convention)[0]

    @property
    def outer_label(self) -> str:
        return arm_labels(self.convention)[1]

    @property
    def arms(self) -> tuple[str, str]:
        return arm_labels(self.convention)

    def joint_projector(self, photon1: str, photon2: str) -> SpectralOperator:
        return self.projectors[f"P_{photon1}{photon2}"]

    def single_projector(self, polarization: str, site: int) -> SpectralOperator:
        return self.projectors[f"P_{polarization}{site}"]


def _arm_projectors() -> dict[str, SpectralOperator]:
    projectors: dict[str, SpectralOperator] = {}
    for p1 in PHOTON_LABELS:
        for p2 in PHOTON_LABELS:
            projectors[f"P_{p1}{p2}"] = SpectralOperator.projective(projector(two_photon(p1 + p2)))
    for site in (1, 2):
        for pol in PHOTON_LABELS:
            single = SpectralOperator.projective(projector(photon(pol)))
            projectors[f"P_{pol}{site}"] = embed(single, site)
    return projectors


def build_scenario(
    convention: Convention = Convention.V_INNER,
    post_selection: PostSelection = PostSelection.DARK,
) -> HardyScenario:
    """Hardy ensemble for the given arm encoding and final detection event."""
    ensemble = PrePostEnsemble(
        hardy_pre_state(convention), hardy_post_state(convention, post_selection)
    )
    logger.debug(
        "scenario_built",
        convention=convention.value,
        post_selection=post_selection.value,
        overlap_re=ensemble.overlap.real,
    )
    return HardyScenario(convention, post_selection, ensemble, _arm_projectors())
