"""
The coordinate transformation law between the two detector frames.

Each public operation comes in two flavours: a scalar function working on
floats, and an ``*_array`` function that broadcasts over numpy arrays and is
what the Monte Carlo code calls.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from bellsim.constants import TWO_PI
from bellsim.enums import TransformLaw
from .constants import ARCCOS_CLAMP_BAND, DEFAULT_CURVE_POINTS
from .enums import Branch
from .exceptions import InternalConsistencyError, InvalidGridError
from .schemas import ExperimentSetting, TransformPoint
from .utils import (
    FloatArray,
    IntArray,
    circle_distance,
    circle_distance_array,
    q_sign,
    q_sign_array,
    wrap_angle,
    wrap_angle_array,
)

__all__ = [
    "branch_of",
    "branch_of_array",
    "circle_distance",
    "circle_distance_array",
    "frame_jacobian_array",
    "frame_map",
    "frame_map_array",
    "l_inverse",
    "l_inverse_array",
    "l_transform",
    "l_transform_array",
    "linear_transform_array",
    "q_sign",
    "q_sign_array",
    "transform_array",
    "transform_curve",
    "wrap_angle",
    "wrap_angle_array",
]

logger = logging.getLogger(__name__)


def branch_of_array(lam: npt.ArrayLike, deltabar: npt.ArrayLike) -> IntArray:
    """Index (1..4) of the sub-interval containing lam for the sign of deltabar."""
    lam_w, d = np.broadcast_arrays(wrap_angle_array(lam), wrap_angle_array(deltabar))
    positive = d >= 0.0
    # lower edge of the second and upper edge of the third sub-interval
    second_start = np.where(positive, d - math.pi, d)
    third_end = np.where(positive, d, d + math.pi)
    branch = np.select(
        [lam_w < second_start, lam_w < 0.0, lam_w < third_end],
        [1, 2, 3],
        default=4,
    )
    return np.asarray(branch, dtype=np.int64)


def branch_of(lam: float, deltabar: float) -> Branch:
    return Branch(int(branch_of_array(lam, deltabar)))


def _clamped_arccos(argument: FloatArray) -> FloatArray:
    outside = np.abs(argument) > 1.0 + ARCCOS_CLAMP_BAND
    if np.any(outside):
        worst = float(argument[outside].ravel()[0])
        logger.error(f"arccos argument out of band: {worst!r}")
        raise InternalConsistencyError(worst, ARCCOS_CLAMP_BAND)
    return np.arccos(np.clip(argument, -1.0, 1.0))


def l_transform_array(lam: npt.ArrayLike, deltabar: npt.ArrayLike) -> FloatArray:
    """Coordinate transformation law L(lam; deltabar), vectorised."""
    lam_w, d = np.broadcast_arrays(wrap_angle_array(lam), wrap_angle_array(deltabar))
    cos_a = np.cos(lam_w)
    cos_d = np.cos(d)
    branch = branch_of_array(lam_w, d)
    # deltabar < 0 runs the same four closed forms in reverse order
    form = np.where(d >= 0.0, branch, 5 - branch)
    argument = np.select(
        [form == 1, form == 2, form == 3],
        [
            -cos_d - cos_a - 1.0,
            cos_d + cos_a - 1.0,
            cos_d - cos_a + 1.0,
        ],
        default=-cos_d + cos_a + 1.0,
    )
    magnitude = _clamped_arccos(np.asarray(argument, dtype=np.float64))
    return wrap_angle_array(q_sign_array(lam_w - d) * magnitude)


def l_transform(lam: float, deltabar: float) -> float:
    """L(lam; deltabar): continuous, strictly increasing, degree-1 circle map."""
    return float(l_transform_array(lam, deltabar))


def l_inverse_array(mu: npt.ArrayLike, deltabar: npt.ArrayLike) -> FloatArray:
    """Analytic inverse of the law: solve cos(lam) on the branch whose image holds mu."""
    mu_w, d = np.broadcast_arrays(wrap_angle_array(mu), wrap_angle_array(deltabar))
    positive = d >= 0.0
    cos_m = np.cos(mu_w)
    cos_d = np.cos(d)

    # Branch images. deltabar >= 0: [-pi,-d) <- 2, [-d,0) <- 3, [0,pi-d) <- 4,
    # [pi-d,pi) <- 1. deltabar < 0: [-pi,-pi-d) <- 4, [-pi-d,0) <- 1,
    # [0,-d) <- 2, [-d,pi) <- 3.
    pos_branch = np.select(
        [mu_w < -d, mu_w < 0.0, mu_w < math.pi - d], [2, 3, 4], default=1
    )
    neg_branch = np.select(
        [mu_w < -math.pi - d, mu_w < 0.0, mu_w < -d], [4, 1, 2], default=3
    )
    branch = np.where(positive, pos_branch, neg_branch)
    form = np.where(positive, branch, 5 - branch)

    cos_lam = np.select(
        [form == 1, form == 2, form == 3],
        [-cos_d - 1.0 - cos_m, cos_m - cos_d + 1.0, cos_d + 1.0 - cos_m],
        default=cos_m + cos_d - 1.0,
    )
    # branches 1 and 2 lie in [-pi, 0), branches 3 and 4 in [0, pi)
    sign = np.where(branch <= 2, -1.0, 1.0)
    return wrap_angle_array(
        sign * _clamped_arccos(np.asarray(cos_lam, dtype=np.float64))
    )


def l_inverse(mu: float, deltabar: float) -> float:
    return float(l_inverse_array(mu, deltabar))


def linear_transform_array(
    lam: npt.ArrayLike, deltabar: npt.ArrayLike
) -> FloatArray:
    """Euclidean law: a pointer at lam from one detector sits at lam - deltabar from the other."""
    return wrap_angle_array(
        np.asarray(lam, dtype=np.float64) - np.asarray(deltabar, dtype=np.float64)
    )


def transform_array(
    lam: npt.ArrayLike,
    deltabar: npt.ArrayLike,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> FloatArray:
    if law is TransformLaw.LINEAR:
        return linear_transform_array(lam, deltabar)
    return l_transform_array(lam, deltabar)


def frame_map_array(
    lambda_a: npt.ArrayLike,
    deltabar: npt.ArrayLike,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> FloatArray:
    """Detector-B coordinates of configurations with detector-A coordinates lambda_a."""
    return wrap_angle_array(-transform_array(lambda_a, deltabar, law))


def frame_map(
    lambda_a: float,
    setting: ExperimentSetting,
    law: TransformLaw = TransformLaw.NONLINEAR,
) -> float:
    """lambda_B = -L(lambda_A; delta - phi)."""
    return float(frame_map_array(lambda_a, setting.deltabar, law))


def frame_jacobian_array(lam: npt.ArrayLike, deltabar: npt.ArrayLike) -> FloatArray:
    """|dL/dlam| = |sin lam| / |sin L(lam)|; infinite where L hits 0 or pi."""
    lam_w = wrap_angle_array(lam)
    image = l_transform_array(lam_w, deltabar)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.abs(np.sin(lam_w)) / np.abs(np.sin(image))


def transform_curve(
    deltabar: float,
    points: int = DEFAULT_CURVE_POINTS,
) -> list[TransformPoint]:
    """Sample the law on a uniform grid of [-pi, pi), with the linear law alongside."""
    if points < 1:
        raise InvalidGridError(points, minimum=1)
    lam = -math.pi + TWO_PI * np.arange(points, dtype=np.float64) / points
    values = l_transform_array(lam, deltabar)
    linear = linear_transform_array(lam, deltabar)
    logger.debug(f"Transformation curve sampled: deltabar={deltabar}, points={points}")
    return [
        TransformPoint(lambda_=float(a), l_value=float(b), linear=float(c))
        for a, b, c in zip(lam, values, linear)
    ]
