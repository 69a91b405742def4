"""Kets over small labeled Hilbert spaces."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from hardy_core.constants import ATOL, PHOTON_LABELS, TWO_PHOTON_LABELS
from hardy_core.exceptions import DimensionMismatchError, InvalidStateError

ComplexArray = npt.NDArray[np.complex128]


def _frozen_array(values: npt.ArrayLike, ndim: int) -> ComplexArray:
    """Copy values into a read-only complex128 array of the given rank."""
    arr = np.array(values, dtype=np.complex128)
    if ndim == 1:
        arr = arr.reshape(-1)
    if arr.ndim != ndim:
        msg = f"Expected a rank-{ndim} array, got shape {arr.shape}"
        raise DimensionMismatchError(msg)
    if not np.all(np.isfinite(arr)):
        msg = "Amplitudes must be finite (no NaN/Inf)"
        raise InvalidStateError(msg)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Ket:
    """Complex amplitude vector, optionally labeled basis-state by basis-state.

    Unnormalized kets are representable (intermediate results such as projected
    states); ``is_normalized`` flags them.
    """

    amps: ComplexArray
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        amps = _frozen_array(self.amps, ndim=1)
        if amps.size == 0:
            msg = "A ket needs at least one amplitude"
            raise InvalidStateError(msg)
        object.__setattr__(self, "amps", amps)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != amps.size:
                msg = f"{len(labels)} labels for a {amps.size}-dim ket"
                raise DimensionMismatchError(msg)
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return int(self.amps.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm**2 - 1.0) <= ATOL

    def normalize(self) -> Ket:
        """Return the unit-norm ket pointing the same way."""
        norm = self.norm
        if norm == 0.0:
            msg = "Cannot normalize the zero vector"
            raise InvalidStateError(msg)
        return Ket(self.amps / norm, self.labels)

    def scaled(self, factor: complex) -> Ket:
        return Ket(self.amps * factor, self.labels)

    def amplitude(self, label: str) -> complex:
        """Amplitude of the basis state carrying ``label``."""
        if self.labels is None:
            msg = "Ket has no basis labels"
            raise InvalidStateError(msg)
        return complex(self.amps[self.labels.index(label)])

    def __add__(self, other: Ket) -> Ket:
        if other.dim != self.dim:
            msg = f"Cannot add kets of dim {self.dim} and {other.dim}"
            raise DimensionMismatchError(msg)
        return Ket(self.amps + other.amps, self.labels)

    def __sub__(self, other: Ket) -> Ket:
        return self + other.scaled(-1.0)


def ket(amps: Sequence[complex] | npt.ArrayLike, labels: Sequence[str] | None = None) -> Ket:
    """Build a ket from raw amplitudes (not normalized)."""
    return Ket(np.asarray(amps, dtype=np.complex128), tuple(labels) if labels else None)


def basis_ket(label: str, labels: Sequence[str]) -> Ket:
    """Unit ket on the basis state named ``label``."""
    labels = tuple(labels)
    if label not in labels:
        msg = f"Unknown basis label {label!r}; expected one of {labels}"
        raise InvalidStateError(msg)
    amps = np.zeros(len(labels), dtype=np.complex128)
    amps[labels.index(label)] = 1.0
    return Ket(amps, labels)


def photon(label: str) -> Ket:
    """Single-photon polarization ket |H> or |V>."""
    return basis_ket(label, PHOTON_LABELS)


def two_photon(label: str) -> Ket:
    """Two-photon basis ket such as |HV> (photon 1 written first)."""
    return basis_ket(label, TWO_PHOTON_LABELS)
