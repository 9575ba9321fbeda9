"""
Probability density of the hidden configurations and its exact sampler.

rho(lam) = |sin lam| / 4 on [-pi, pi). It is the unique density that keeps the
probability of each configuration independent of the detector frame used to
describe it.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from bellsim.montecarlo import MonteCarloRunner, get_runner
from bellsim.transform.utils import FloatArray, wrap_angle_array
from .constants import MEDIAN_MASS
from .exceptions import InvalidSampleCountError
from .schemas import HiddenConfig, RngStream

logger = logging.getLogger(__name__)


def density_array(lam: npt.ArrayLike) -> FloatArray:
    return 0.25 * np.abs(np.sin(wrap_angle_array(lam)))


def density(lam: float) -> float:
    """rho(lam) = |sin lam| / 4."""
    return float(density_array(lam))


def cdf_array(lam: npt.ArrayLike) -> FloatArray:
    l_w = wrap_angle_array(lam)
    cos_l = np.cos(l_w)
    return np.where(l_w < 0.0, 0.25 * (1.0 + cos_l), 0.5 + 0.25 * (1.0 - cos_l))


def cdf(lam: float) -> float:
    """Probability mass of [-pi, lam)."""
    return float(cdf_array(lam))


def interval_mass(lower: float, upper: float) -> float:
    """Mass of [lower, upper) for -pi <= lower <= upper <= pi."""
    upper_cdf = 1.0 if upper >= math.pi else cdf(upper)
    return upper_cdf - cdf(lower)


def inverse_cdf_array(u: npt.ArrayLike) -> FloatArray:
    """Map uniforms in [0, 1) to configurations distributed with rho."""
    u_arr = np.asarray(u, dtype=np.float64)
    lower = -np.arccos(np.clip(4.0 * u_arr - 1.0, -1.0, 1.0))
    upper = np.arccos(np.clip(3.0 - 4.0 * u_arr, -1.0, 1.0))
    return wrap_angle_array(np.where(u_arr < MEDIAN_MASS, lower, upper))


def inverse_cdf(u: float) -> float:
    return float(inverse_cdf_array(u))


def _draw_kernel(rng: np.random.Generator, size: int) -> FloatArray:
    return inverse_cdf_array(rng.random(size))


def sample_array(
    stream: RngStream, n: int, runner: MonteCarloRunner | None = None
) -> FloatArray:
    """n i.i.d. configurations; one uniform per draw, chunk k from generator k."""
    if n < 0:
        raise InvalidSampleCountError(n, minimum=0)
    if n == 0:
        return np.empty(0, dtype=np.float64)
    runner = runner or get_runner()
    logger.info(f"Sampling {n} configurations (seed={stream.seed}, stream={stream.stream_index})")
    return runner.concat_chunks(_draw_kernel, n, stream)


def sample(stream: RngStream, n: int) -> list[HiddenConfig]:
    """Draw n hidden configurations by inverse-CDF sampling."""
    return [HiddenConfig(lambda_=float(lam)) for lam in sample_array(stream, n)]


def bin_masses(bins: int) -> FloatArray:
    """Analytic mass of each of `bins` equal-width bins over [-pi, pi)."""
    edges = -math.pi + 2.0 * math.pi * np.arange(bins + 1, dtype=np.float64) / bins
    values = cdf_array(edges[:-1])
    return np.diff(np.append(values, 1.0))
