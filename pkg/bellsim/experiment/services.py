"""
Service layer for the two-detector experiment.

Detector responses, single-realization simulation, the four-block partition
of the configuration circle, and exact and Monte Carlo correlations, both for
the model and for the gauge-symmetric classical baseline.
"""

import functools
import logging
import math

import numpy as np
import numpy.typing as npt

from bellsim.constants import TWO_PI
from bellsim.distribution.exceptions import InvalidSampleCountError
from bellsim.distribution.schemas import RngStream
from bellsim.distribution.services import inverse_cdf_array
from bellsim.enums import TransformLaw
from bellsim.models import CorrelationEstimate
from bellsim.montecarlo import MonteCarloRunner, get_runner
from bellsim.transform.schemas import ExperimentSetting
from bellsim.transform.services import frame_map_array
from bellsim.transform.utils import FloatArray, IntArray, wrap_angle, wrap_angle_array
from .enums import Outcome
from .exceptions import InvalidGridError
from .schemas import JointDistribution, ScanRow

logger = logging.getLogger(__name__)


def response_array(lam: npt.ArrayLike) -> IntArray:
    """+1 on [0, pi), -1 on [-pi, 0)."""
    return np.where(wrap_angle_array(lam) >= 0.0, 1, -1).astype(np.int64)


def response(lam: float) -> Outcome:
    return Outcome(int(response_array(lam)))


def simulate_pairs_array(
    lambda_a: npt.ArrayLike,
    deltabar: npt.ArrayLike,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> tuple[IntArray, IntArray]:
    """Outcomes of both detectors; each depends only on its own coordinate."""
    s_a = response_array(lambda_a)
    s_b = response_array(frame_map_array(lambda_a, deltabar, law))
    return s_a, s_b


def simulate_pair(
    lambda_a: float, setting: ExperimentSetting
) -> tuple[Outcome, Outcome]:
    s_a, s_b = simulate_pairs_array(lambda_a, setting.deltabar)
    return Outcome(int(s_a)), Outcome(int(s_b))


def partition_block(
    lambda_a: float, setting: ExperimentSetting
) -> tuple[Outcome, Outcome]:
    """Outcome pair predicted by the coarse partition of the circle.

    For deltabar = d >= 0: [0, d) -> (+,+), [d, pi) -> (+,-),
    [d-pi, 0) -> (-,+), [-pi, d-pi) -> (-,-). For d < 0 the blocks are
    [d+pi, pi) -> (+,+), [0, d+pi) -> (+,-), [-pi, d) -> (-,+), [d, 0) -> (-,-).
    """
    lam = wrap_angle(lambda_a)
    d = setting.deltabar
    plus, minus = Outcome.PLUS, Outcome.MINUS
    if d >= 0.0:
        if lam >= 0.0:
            return (plus, plus) if lam < d else (plus, minus)
        return (minus, plus) if lam >= d - math.pi else (minus, minus)
    if lam >= 0.0:
        return (plus, plus) if lam >= d + math.pi else (plus, minus)
    return (minus, plus) if lam < d else (minus, minus)


def joint_probabilities(setting: ExperimentSetting) -> JointDistribution:
    """Closed-form block probabilities, even in deltabar."""
    c = math.cos(setting.deltabar)
    same = 0.25 * (1.0 - c)
    opposite = 0.25 * (1.0 + c)
    return JointDistribution(p_pp=same, p_pm=opposite, p_mp=opposite, p_mm=same)


def exact_correlation(setting: ExperimentSetting) -> float:
    """E(delta, phi) = -cos(delta - phi)."""
    return joint_probabilities(setting).correlation


def exact_correlation_array(deltabar: npt.ArrayLike) -> FloatArray:
    return -np.cos(wrap_angle_array(deltabar))


def _check_count(n: int) -> None:
    if n < 1:
        raise InvalidSampleCountError(n, minimum=1)


def _product_kernel(deltabar: float, rng: np.random.Generator, size: int) -> IntArray:
    s_a, s_b = simulate_pairs_array(inverse_cdf_array(rng.random(size)), deltabar)
    return np.array([np.sum(s_a * s_b)], dtype=np.int64)


def _joint_count_kernel(deltabar: float, rng: np.random.Generator, size: int) -> IntArray:
    s_a, s_b = simulate_pairs_array(inverse_cdf_array(rng.random(size)), deltabar)
    return np.array(
        [
            np.count_nonzero((s_a > 0) & (s_b > 0)),
            np.count_nonzero((s_a > 0) & (s_b < 0)),
            np.count_nonzero((s_a < 0) & (s_b > 0)),
            np.count_nonzero((s_a < 0) & (s_b < 0)),
        ],
        dtype=np.int64,
    )


def mc_correlation(
    setting: ExperimentSetting,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> CorrelationEstimate:
    """Monte Carlo estimate of E over n configurations drawn from rho."""
    _check_count(n)
    runner = runner or get_runner()
    total = runner.sum_chunks(
        functools.partial(_product_kernel, setting.deltabar), n, stream
    )
    estimate = CorrelationEstimate.from_product_sum(int(total[0]), n)
    logger.info(
        f"MC correlation: deltabar={setting.deltabar:.6f}, n={n}, "
        f"mean={estimate.mean:.6f}, workers={runner.workers}"
    )
    return estimate


def mc_joint_frequencies(
    setting: ExperimentSetting,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> JointDistribution:
    """Empirical frequencies of the four outcome pairs."""
    _check_count(n)
    runner = runner or get_runner()
    counts = runner.sum_chunks(
        functools.partial(_joint_count_kernel, setting.deltabar), n, stream
    )
    p_pp, p_pm, p_mp, p_mm = (int(c) / n for c in counts)
    return JointDistribution(p_pp=p_pp, p_pm=p_pm, p_mp=p_mp, p_mm=p_mm)


def correlation_scan(
    points: int,
    n: int,
    stream: RngStream,
    phi: float = 0.0,
    runner: MonteCarloRunner | None = None,
) -> list[ScanRow]:
    """Exact and MC correlations on a uniform grid of delta over [-pi, pi).

    Grid point i uses the substream i of `stream`.
    """
    if points < 1:
        raise InvalidGridError(points, minimum=1)
    _check_count(n)
    rows = []
    for i in range(points):
        delta = -math.pi + TWO_PI * i / points
        setting = ExperimentSetting(delta=delta, phi=phi)
        estimate = mc_correlation(setting, n, stream.substream(i), runner)
        rows.append(
            ScanRow(
                deltabar=setting.deltabar,
                e_exact=exact_correlation(setting),
                e_mc=estimate.mean,
                stderr=estimate.stderr,
                n=n,
            )
        )
    return rows


# --- classical gauge-symmetric baseline ---------------------------------


def classical_simulate_pairs_array(
    lam: npt.ArrayLike, deltabar: npt.ArrayLike
) -> tuple[IntArray, IntArray]:
    """Pointer model with lambda_B = wrap(-(lambda - deltabar))."""
    return simulate_pairs_array(lam, deltabar, law=TransformLaw.LINEAR)


def classical_simulate_pair(lam: float, deltabar: float) -> tuple[Outcome, Outcome]:
    s_a, s_b = classical_simulate_pairs_array(lam, deltabar)
    return Outcome(int(s_a)), Outcome(int(s_b))


def classical_correlation(deltabar: float) -> float:
    """E_cl = 2|deltabar|/pi - 1 for the uniform pointer."""
    return 2.0 * abs(wrap_angle(deltabar)) / math.pi - 1.0


def uniform_angles(rng: np.random.Generator, size: int) -> FloatArray:
    """Uniform angles on [-pi, pi)."""
    return wrap_angle_array(-math.pi + TWO_PI * rng.random(size))


def _classical_product_kernel(
    deltabar: float, rng: np.random.Generator, size: int
) -> IntArray:
    s_a, s_b = classical_simulate_pairs_array(uniform_angles(rng, size), deltabar)
    return np.array([np.sum(s_a * s_b)], dtype=np.int64)


def classical_mc_correlation(
    deltabar: float,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> CorrelationEstimate:
    _check_count(n)
    runner = runner or get_runner()
    total = runner.sum_chunks(
        functools.partial(_classical_product_kernel, wrap_angle(deltabar)), n, stream
    )
    return CorrelationEstimate.from_product_sum(int(total[0]), n)


# --- incoherent source ---------------------------------------------------


def _incoherent_kernel(delta: float, rng: np.random.Generator, size: int) -> IntArray:
    lam = inverse_cdf_array(rng.random(size))
    phi = uniform_angles(rng, size)
    s_a, s_b = simulate_pairs_array(lam, wrap_angle_array(delta - phi))
    return np.array([np.sum(s_a * s_b)], dtype=np.int64)


def incoherent_correlation(
    delta: float,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> CorrelationEstimate:
    """Correlation when every realization carries a fresh uniform source phase."""
    _check_count(n)
    runner = runner or get_runner()
    total = runner.sum_chunks(
        functools.partial(_incoherent_kernel, wrap_angle(delta)), n, stream
    )
    estimate = CorrelationEstimate.from_product_sum(int(total[0]), n)
    logger.info(f"Incoherent correlation: delta={delta:.6f}, n={n}, mean={estimate.mean:.6f}")
    return estimate
