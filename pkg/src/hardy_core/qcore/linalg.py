"""Tensor products, partial traces and the basic bra-ket algebra.

Index convention: the left operand of ``tensor`` is the most significant
factor, so photon 1 is written first ({HH, HV, VH, VV}). Subsystems are
numbered from 1, matching photon numbers.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import overload

import numpy as np

from hardy_core.exceptions import DimensionMismatchError, FactorizationError
from hardy_core.qcore.operators import DensityMatrix, Operator, SpectralOperator, identity
from hardy_core.qcore.states import ComplexArray, Ket


@overload
def tensor(a: Ket, b: Ket) -> Ket: ...
@overload
def tensor(a: Operator, b: Operator) -> Operator: ...
@overload
def tensor(a: SpectralOperator, b: SpectralOperator) -> SpectralOperator: ...


def tensor(
    a: Ket | Operator | SpectralOperator, b: Ket | Operator | SpectralOperator
) -> Ket | Operator | SpectralOperator:
    """Kronecker product, left operand most significant."""
    if isinstance(a, Ket) and isinstance(b, Ket):
        labels = None
        if a.labels is not None and b.labels is not None:
            labels = tuple(la + lb for la in a.labels for lb in b.labels)
        return Ket(np.kron(a.amps, b.amps), labels)
    if isinstance(a, Operator) and isinstance(b, Operator):
        return Operator(np.kron(a.entries, b.entries), a.hermitian and b.hermitian)
    if isinstance(a, SpectralOperator) and isinstance(b, SpectralOperator):
        return SpectralOperator(
            tuple(
                (va * vb, tensor(pa, pb)) for va, pa in a.branches for vb, pb in b.branches
            )
        )
    msg = f"Cannot tensor {type(a).__name__} with {type(b).__name__}"
    raise TypeError(msg)


@overload
def embed(op: Operator, site: int, dims: Sequence[int] = (2, 2)) -> Operator: ...
@overload
def embed(op: SpectralOperator, site: int, dims: Sequence[int] = (2, 2)) -> SpectralOperator: ...


def embed(
    op: Operator | SpectralOperator, site: int, dims: Sequence[int] = (2, 2)
) -> Operator | SpectralOperator:
    """Extend a single-subsystem operator by identities on every other factor."""
    dims = tuple(dims)
    _check_site(site, dims)
    if op.dim != dims[site - 1]:
        msg = f"Operator of dim {op.dim} cannot act on factor {site} of dims {dims}"
        raise DimensionMismatchError(msg)
    if isinstance(op, SpectralOperator):
        return SpectralOperator(
            tuple((value, embed(proj, site, dims)) for value, proj in op.branches)
        )
    factors = [op if index == site else identity(dim) for index, dim in enumerate(dims, start=1)]
    result = factors[0]
    for factor in factors[1:]:
        result = tensor(result, factor)
    return result


def _check_site(site: int, dims: tuple[int, ...]) -> None:
    if not 1 <= site <= len(dims):
        msg = f"Subsystem {site} out of range for dims {dims}"
        raise FactorizationError(msg)


def _reduce(entries: ComplexArray, keep: int, dims: tuple[int, ...]) -> ComplexArray:
    _check_site(keep, dims)
    if math.prod(dims) != entries.shape[0]:
        msg = f"Dimension {entries.shape[0]} does not factor as {dims}"
        raise FactorizationError(msg)
    n = len(dims)
    t = entries.reshape(dims + dims)
    remaining = n
    # Descending order keeps the axis numbers of lower factors valid.
    for axis in sorted((i for i in range(n) if i != keep - 1), reverse=True):
        t = np.trace(t, axis1=axis, axis2=axis + remaining)
        remaining -= 1
    size = dims[keep - 1]
    return np.asarray(t, dtype=np.complex128).reshape(size, size)


def operator_partial_trace(op: Operator, keep: int, dims: Sequence[int] = (2, 2)) -> Operator:
    """Trace out every factor except ``keep`` (1-based)."""
    return Operator(_reduce(op.entries, keep, tuple(dims)), op.hermitian)


def partial_trace(rho: DensityMatrix, keep: int, dims: Sequence[int] = (2, 2)) -> DensityMatrix:
    """Reduced density matrix of subsystem ``keep`` (1-based)."""
    return DensityMatrix(_reduce(rho.entries, keep, tuple(dims)))


def inner(a: Ket, b: Ket) -> complex:
    """<a|b>, conjugating the left argument."""
    if a.dim != b.dim:
        msg = f"inner: dims {a.dim} and {b.dim} differ"
        raise DimensionMismatchError(msg)
    return complex(np.vdot(a.amps, b.amps))


def outer(a: Ket, b: Ket) -> Operator:
    """|a><b|."""
    if a.dim != b.dim:
        msg = f"outer: dims {a.dim} and {b.dim} differ"
        raise DimensionMismatchError(msg)
    return Operator(np.outer(a.amps, b.amps.conj()))


def apply(op: Operator, state: Ket) -> Ket:
    """A|k>, returned unnormalized."""
    if op.dim != state.dim:
        msg = f"apply: operator dim {op.dim} vs ket dim {state.dim}"
        raise DimensionMismatchError(msg)
    return Ket(op.entries @ state.amps, state.labels)


def expectation(op: Operator, rho: DensityMatrix) -> complex:
    """Tr(A rho)."""
    if op.dim != rho.dim:
        msg = f"expectation: operator dim {op.dim} vs state dim {rho.dim}"
        raise DimensionMismatchError(msg)
    return complex(np.trace(op.entries @ rho.entries))


def dagger(op: Operator) -> Operator:
    return Operator(op.entries.conj().T, op.hermitian)
