"""
CHSH statistic, per-configuration combinations and the geometric-phase cycle.
"""

import functools
import logging
import math

import numpy as np
import numpy.typing as npt

from bellsim.constants import TWO_PI
from bellsim.distribution.exceptions import InvalidSampleCountError
from bellsim.distribution.schemas import RngStream
from bellsim.distribution.services import density_array, interval_mass
from bellsim.enums import TransformLaw
from bellsim.experiment.services import (
    classical_correlation,
    exact_correlation,
    exact_correlation_array,
    response_array,
    uniform_angles,
)
from bellsim.montecarlo import MonteCarloRunner, get_runner
from bellsim.transform.schemas import ExperimentSetting
from bellsim.transform.services import frame_map_array
from bellsim.transform.utils import (
    FloatArray,
    IntArray,
    circle_distance_array,
    wrap_angle,
    wrap_angle_array,
)
from .constants import (
    DEFAULT_PROFILE_POINTS,
    DEFAULT_QUADRATURE_POINTS,
    DEFAULT_TSIRELSON_GRID,
    MIN_PROFILE_POINTS,
    PER_CONFIG_VALUES,
)
from .exceptions import InvalidCorrelationError, InvalidGridError, NonBinaryOutcomeError
from .schemas import (
    ChshEstimate,
    ChshSettings,
    CycleParams,
    PerConfigDistribution,
    PerConfigMass,
    PhasePoint,
    PhaseProfile,
    SettingChain,
    TsirelsonScan,
)

logger = logging.getLogger(__name__)


def chsh_statistic(e1: float, e2: float, e3: float, e4: float) -> float:
    """e1 + e2 + e3 - e4, signed."""
    for value in (e1, e2, e3, e4):
        if not -1.0 <= value <= 1.0:
            raise InvalidCorrelationError(value)
    return e1 + e2 + e3 - e4


def model_chsh(settings: ChshSettings) -> float:
    """CHSH combination of the exact model correlations -cos(delta_i - phi)."""
    e1, e2, e3, e4 = (
        exact_correlation(ExperimentSetting.from_deltabar(d)) for d in settings.deltabars()
    )
    return chsh_statistic(e1, e2, e3, e4)


def classical_chsh(settings: ChshSettings) -> float:
    """CHSH combination of the classical baseline correlations."""
    e1, e2, e3, e4 = (classical_correlation(d) for d in settings.deltabars())
    return chsh_statistic(e1, e2, e3, e4)


def _check_binary(*outcomes: int) -> None:
    for outcome in outcomes:
        if outcome not in (1, -1):
            raise NonBinaryOutcomeError(outcome)


def per_config_classical(s_a: int, s_a_prime: int, s_b: int, s_b_prime: int) -> int:
    """sA (sB + sB') + sA' (sB - sB'); always +2 or -2."""
    _check_binary(s_a, s_a_prime, s_b, s_b_prime)
    return int(s_a * (s_b + s_b_prime) + s_a_prime * (s_b - s_b_prime))


def per_config_model_array(lambda_a: npt.ArrayLike, settings: ChshSettings) -> IntArray:
    """s(lambda_A) times the signed sum of detector-B responses in the four frames."""
    x1, x2, x3, x4 = settings.deltabars()
    lam = wrap_angle_array(lambda_a)
    s_b = [response_array(frame_map_array(lam, x)) for x in (x1, x2, x3, x4)]
    return response_array(lam) * (s_b[0] + s_b[1] + s_b[2] - s_b[3])


def per_config_model(lambda_a: float, settings: ChshSettings) -> int:
    """Per-configuration CHSH value of the model, in {-4, -2, 0, 2, 4}."""
    return int(per_config_model_array(lambda_a, settings))


def response_breakpoints(settings: ChshSettings) -> FloatArray:
    """Sorted points of [-pi, pi) where some response of the combination flips.

    s(lambda_A) flips at 0 and -pi; s(-L(lambda; x)) flips where L crosses 0,
    at lambda = x, and where it wraps through +-pi, at lambda = x + pi.
    """
    anchors = np.array(settings.deltabars(), dtype=np.float64)
    points = np.concatenate(
        [[-math.pi, 0.0], wrap_angle_array(anchors), wrap_angle_array(anchors + math.pi)]
    )
    return np.unique(points)


def per_config_distribution(settings: ChshSettings) -> PerConfigDistribution:
    """Exact rho-mass of each per-configuration value.

    The combination is constant between consecutive breakpoints, so each cell
    contributes its probability mass to the value taken at its midpoint.
    """
    edges = response_breakpoints(settings)
    uppers = np.append(edges[1:], math.pi)
    values = per_config_model_array(0.5 * (edges + uppers), settings)
    masses = {value: 0.0 for value in PER_CONFIG_VALUES}
    for lower, upper, value in zip(edges, uppers, values):
        masses[int(value)] += interval_mass(float(lower), float(upper))
    logger.debug(f"Per-config cells: {len(edges)}")
    return PerConfigDistribution(
        masses=[PerConfigMass(value=v, weight=w) for v, w in masses.items()]
    )


def per_config_mean(settings: ChshSettings) -> float:
    """rho-expectation of the per-configuration combination."""
    return per_config_distribution(settings).mean


def per_config_midpoint_mean(
    settings: ChshSettings, points: int = DEFAULT_QUADRATURE_POINTS
) -> float:
    """Midpoint-rule quadrature of the same expectation on a uniform grid."""
    if points < 1:
        raise InvalidGridError(points, minimum=1)
    lam = -math.pi + TWO_PI * (np.arange(points, dtype=np.float64) + 0.5) / points
    weights = density_array(lam) * (TWO_PI / points)
    return float(np.sum(per_config_model_array(lam, settings) * weights))


def _classical_chsh_kernel(
    settings: ChshSettings, rng: np.random.Generator, size: int
) -> IntArray:
    lam = uniform_angles(rng, size)
    d1 = wrap_angle(settings.delta1 - settings.phi)
    d2 = wrap_angle(settings.delta2 - settings.phi)
    s_a = response_array(lam)
    s_a_prime = response_array(lam - settings.delta)
    s_b = response_array(d1 - lam)
    s_b_prime = response_array(d2 - lam)
    values = s_a * (s_b + s_b_prime) + s_a_prime * (s_b - s_b_prime)
    return np.array([np.sum(values)], dtype=np.int64)


def classical_chsh_mc(
    settings: ChshSettings,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> ChshEstimate:
    """Monte Carlo of the CHSH combination in the classical baseline.

    Each draw evaluates the per-configuration combination for a uniform
    pointer, with detector A at 0 and delta and detector B at delta1, delta2.
    """
    if n < 1:
        raise InvalidSampleCountError(n, minimum=1)
    runner = runner or get_runner()
    total = runner.sum_chunks(functools.partial(_classical_chsh_kernel, settings), n, stream)
    estimate = ChshEstimate.from_binary_sum(int(total[0]), n)
    logger.info(f"Classical CHSH MC: n={n}, mean={estimate.mean:.6f}")
    return estimate


def holonomy_cycle_array(
    lam: npt.ArrayLike,
    params: CycleParams,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> FloatArray:
    """Apply the four frame maps, innermost (parameter d1) first."""
    result = wrap_angle_array(lam)
    for x in (
        params.d1,
        wrap_angle(params.d1 - params.dd),
        wrap_angle(params.d2 - params.dd),
        params.d2,
    ):
        result = frame_map_array(result, x, law)
    return result


def holonomy_cycle(
    lam: float, params: CycleParams, law: TransformLaw = TransformLaw.NONLINEAR
) -> float:
    return float(holonomy_cycle_array(lam, params, law))


def geometric_phase_profile(
    params: CycleParams,
    grid_n: int = DEFAULT_PROFILE_POINTS,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> PhaseProfile:
    """Circle distance between lambda and its image under the cycle, on a uniform grid."""
    if grid_n < MIN_PROFILE_POINTS:
        raise InvalidGridError(grid_n, minimum=MIN_PROFILE_POINTS)
    lam = -math.pi + TWO_PI * np.arange(grid_n, dtype=np.float64) / grid_n
    defects = circle_distance_array(holonomy_cycle_array(lam, params, law), lam)
    worst = int(np.argmax(defects))
    logger.info(
        f"Geometric phase profile: law={law.value}, grid={grid_n}, sup={defects[worst]:.6g}"
    )
    return PhaseProfile(
        points=[PhasePoint(lambda_=float(a), defect=float(b)) for a, b in zip(lam, defects)],
        sup=float(defects[worst]),
        argsup=float(lam[worst]),
    )


def compose_settings(delta_a: float, delta_b: float) -> float:
    """Relative rotation by delta_a followed by delta_b."""
    return wrap_angle(delta_a + delta_b)


def setting_chain(delta: float, delta_prime: float, phi: float) -> SettingChain:
    """Transformation parameters of the reference and the four derived settings.

    Taking t1 as new reference, the source appears with phase phi - delta, so
    the further rotation by delta_prime gives delta_prime - (phi - delta).
    """
    t1 = compose_settings(delta, -phi)
    return SettingChain(
        t0=wrap_angle(-phi),
        t1=t1,
        t2=compose_settings(delta_prime, t1),
        t3=wrap_angle(delta),
        t4=compose_settings(delta_prime, delta),
    )


def tsirelson_scan(grid_n: int = DEFAULT_TSIRELSON_GRID) -> TsirelsonScan:
    """Largest |model_chsh| over a grid_n^3 grid of (delta1, delta2, delta) at phi = 0."""
    if grid_n < 1:
        raise InvalidGridError(grid_n, minimum=1)
    axis = -math.pi + TWO_PI * np.arange(grid_n, dtype=np.float64) / grid_n
    d1, d2, dd = np.meshgrid(axis, axis, axis, indexing="ij")
    statistic = (
        exact_correlation_array(d1)
        + exact_correlation_array(d2)
        + exact_correlation_array(d1 - dd)
        - exact_correlation_array(d2 - dd)
    )
    magnitude = np.abs(statistic)
    i, j, k = np.unravel_index(int(np.argmax(magnitude)), magnitude.shape)
    best = ChshSettings(delta1=float(axis[i]), delta2=float(axis[j]), delta=float(axis[k]))
    logger.info(f"Tsirelson scan: grid={grid_n}, max |S|={magnitude[i, j, k]:.12g}")
    return TsirelsonScan(grid_n=grid_n, max_abs=float(magnitude[i, j, k]), argmax=best)
