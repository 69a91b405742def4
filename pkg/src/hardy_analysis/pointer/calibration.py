"""Numerical fits of the pointer readout coefficients against the analytic oracle.

Both fits draw random ensembles whose post-selected state stays close to the
pre-selected one (overlap ~ 0.96) and observables with eigenvalues in
[0.5, 1.5], then solve y = k x by least squares at every coupling.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np
import structlog

from hardy_analysis.pointer.estimators import couple_pair
from hardy_analysis.pointer.readout import readout
from hardy_analysis.pointer.state import couple, prepare
from hardy_analysis.weakval import PrePostEnsemble, tensor_weak_value, weak_value
from hardy_core.constants import CALIBRATION_COUPLINGS, DEFAULT_SIGMA
from hardy_core.exceptions import HardyError
from hardy_core.models import CoefficientFit, PointerConfig
from hardy_core.qcore import Ket, Operator, SpectralOperator, embed

logger = structlog.get_logger()

# Post = normalize(pre + spread * random) keeps the overlap near one
POST_SPREAD = 0.3
MIN_IMAG_WEAK_VALUE = 0.02
MIN_JOINT_DENOMINATOR = 0.2
MAX_DRAWS_PER_SAMPLE = 100


def random_unit_ket(rng: np.random.Generator, dim: int) -> Ket:
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return Ket(amps).normalize()


def random_observable(
    rng: np.random.Generator, dim: int, low: float = 0.5, high: float = 1.5
) -> SpectralOperator:
    """Observable with eigenvalues drawn from [low, high] in a random orthonormal basis."""
    basis, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    values = rng.uniform(low, high, size=dim)
    projectors = [
        Operator(np.outer(basis[:, i], basis[:, i].conj()), hermitian=True) for i in range(dim)
    ]
    return SpectralOperator.from_pairs([float(v) for v in values], projectors)


def nearby_ensemble(
    rng: np.random.Generator, dim: int, spread: float = POST_SPREAD
) -> PrePostEnsemble:
    pre = random_unit_ket(rng, dim)
    post = pre + random_unit_ket(rng, dim).scaled(spread)
    return PrePostEnsemble(pre, post.normalize())


def _least_squares(xs: Sequence[float], ys: Sequence[float]) -> float:
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    return float(np.dot(x, y) / np.dot(x, x))


def _draw[T](samples: int, draw: Callable[[], T | None]) -> list[T]:
    cases: list[T] = []
    for _ in range(samples * MAX_DRAWS_PER_SAMPLE):
        case = draw()
        if case is not None:
            cases.append(case)
        if len(cases) == samples:
            return cases
    msg = f"Only {len(cases)} of {samples} calibration ensembles passed the filter"
    raise HardyError(msg)


def _fit(
    name: str,
    couplings: Sequence[float],
    samples: int,
    measure: Callable[[float], tuple[list[float], list[float]]],
) -> CoefficientFit:
    per_coupling: list[tuple[float, float]] = []
    all_x: list[float] = []
    all_y: list[float] = []
    for g in couplings:
        xs, ys = measure(g)
        per_coupling.append((g, _least_squares(xs, ys)))
        all_x.extend(xs)
        all_y.extend(ys)
    fits = [k for _, k in per_coupling]
    result = CoefficientFit(
        name=name,
        coefficient=_least_squares(all_x, all_y),
        per_coupling=per_coupling,
        spread=max(fits) - min(fits),
        samples=samples,
    )
    logger.info(
        "coefficient_fitted", name=name, coefficient=result.coefficient, spread=result.spread
    )
    return result


def calibrate_imag_coefficient(
    samples: int = 20,
    seed: int = 0,
    sigma: float = DEFAULT_SIGMA,
    couplings: Sequence[float] = CALIBRATION_COUPLINGS,
) -> CoefficientFit:
    """Fit k in <p> sigma^2 / g = k Im<A>_w on random single-qubit ensembles."""
    rng = np.random.default_rng(seed)

    def draw() -> tuple[PrePostEnsemble, SpectralOperator, float] | None:
        e = nearby_ensemble(rng, 2)
        obs = random_observable(rng, 2)
        imag = weak_value(e, obs).imag
        return (e, obs, imag) if abs(imag) >= MIN_IMAG_WEAK_VALUE else None

    cases = _draw(samples, draw)

    def measure(g: float) -> tuple[list[float], list[float]]:
        xs, ys = [], []
        for e, obs, imag in cases:
            result = readout(couple(prepare(e.pre), obs, PointerConfig(sigma=sigma, g=g)), e.post)
            xs.append(imag)
            ys.append(result.mean_p[0] * sigma**2 / g)
        return xs, ys

    return _fit("imag_readout", couplings, samples, measure)


def calibrate_joint_coefficient(
    samples: int = 20,
    seed: int = 0,
    sigma: float = DEFAULT_SIGMA,
    couplings: Sequence[float] = CALIBRATION_COUPLINGS,
) -> CoefficientFit:
    """Fit k in <x1 x2> / g^2 = k [Re<AB>_w + Re(<A>_w conj<B>_w)] on random pairs."""
    rng = np.random.default_rng(seed)

    def draw() -> tuple[PrePostEnsemble, SpectralOperator, SpectralOperator, float] | None:
        e = nearby_ensemble(rng, 4)
        obs_a = random_observable(rng, 2)
        obs_b = random_observable(rng, 2)
        a_w = weak_value(e, embed(obs_a, 1)).value
        b_w = weak_value(e, embed(obs_b, 2)).value
        x = tensor_weak_value(e, obs_a, obs_b).real + (a_w * b_w.conjugate()).real
        return (e, obs_a, obs_b, x) if abs(x) >= MIN_JOINT_DENOMINATOR else None

    cases = _draw(samples, draw)

    def measure(g: float) -> tuple[list[float], list[float]]:
        xs, ys = [], []
        for e, obs_a, obs_b, x in cases:
            result = readout(couple_pair(e, obs_a, obs_b, sigma, g), e.post)
            xs.append(x)
            ys.append(result.corr_xx[0][1] / g**2)
        return xs, ys

    return _fit("joint_correlation", couplings, samples, measure)
