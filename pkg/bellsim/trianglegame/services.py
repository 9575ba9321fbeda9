"""
Triangle games.

In the flat game a random planar direction is read by three detectors with
fixed reference directions; the responses are functions of one common
coordinate and the inequality |E_AB + E_AC| <= 1 + E_BC holds. In the
spherical game the random direction lives in the tangent plane of a point on
the perimeter of a spherical triangle and reaches each vertex by parallel
transport along the perimeter, so the three detectors no longer share a
coordinate: transporting around the loop rotates it by the spherical excess.
"""

import functools
import logging
import math

import numpy as np
import numpy.typing as npt

from bellsim.constants import TWO_PI
from bellsim.distribution.exceptions import InvalidSampleCountError
from bellsim.distribution.schemas import RngStream
from bellsim.experiment.services import uniform_angles
from bellsim.models import CorrelationEstimate
from bellsim.montecarlo import MonteCarloRunner, get_runner
from bellsim.transform.utils import FloatArray, IntArray, wrap_angle, wrap_angle_array
from .constants import HOLONOMY_WINDING_EPSILON, TRANSPORT_EPSILON
from .exceptions import AntipodalTransportError
from .schemas import GameReport, SphericalTriangle, TangentVector, UnitVec3

logger = logging.getLogger(__name__)


# --- geometry ------------------------------------------------------------


def _unit(v: FloatArray) -> FloatArray:
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def _dot(u: FloatArray, v: FloatArray) -> FloatArray:
    return np.sum(u * v, axis=-1)


def arc_length(u: FloatArray, v: FloatArray) -> float:
    """Great-circle distance between two unit vectors."""
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(np.dot(u, v)))


def tangent_toward(p: FloatArray, q: FloatArray) -> FloatArray:
    """Unit tangent at p of the geodesic from p to q."""
    return _unit(q - _dot(p, q)[..., None] * p)


def transport_array(dirs: npt.ArrayLike, base: npt.ArrayLike, to: npt.ArrayLike) -> FloatArray:
    """Parallel transport of tangent vectors along the geodesic from base to to.

    Along a great circle, transport is the rotation about base x to by the arc
    angle. Arguments broadcast over a leading axis.
    """
    v = np.asarray(dirs, dtype=np.float64)
    base_arr = np.asarray(base, dtype=np.float64)
    to_arr = np.asarray(to, dtype=np.float64)
    cross = np.cross(base_arr, to_arr)
    sin_theta = np.linalg.norm(cross, axis=-1)
    cos_theta = _dot(base_arr, to_arr)
    if np.any((sin_theta < TRANSPORT_EPSILON) & (cos_theta < 0.0)):
        raise AntipodalTransportError()

    axis = cross / np.where(sin_theta > 0.0, sin_theta, 1.0)[..., None]
    theta = np.arctan2(sin_theta, cos_theta)[..., None]
    # Rodrigues' rotation formula
    return (
        v * np.cos(theta)
        + np.cross(axis, v) * np.sin(theta)
        + axis * _dot(axis, v)[..., None] * (1.0 - np.cos(theta))
    )


def transport(v: TangentVector, to: UnitVec3) -> TangentVector:
    """Transport a tangent vector along the geodesic from its base point to `to`."""
    moved = transport_array(v.dir.array, v.base.array, to.array)
    return TangentVector(base=to, dir=UnitVec3.from_array(moved))


def loop_holonomy(tri: SphericalTriangle) -> float:
    """Signed rotation of a tangent vector transported around A -> B -> C -> A."""
    a, b, c = tri.vertices()
    start = tangent_toward(a, b)
    moved = transport_array(start, a, b)
    moved = transport_array(moved, b, c)
    moved = transport_array(moved, c, a)
    angle = math.atan2(float(np.dot(a, np.cross(start, moved))), float(np.dot(start, moved)))
    # the excess of a proper triangle lies in (0, 2 pi); undo the atan2 wrap
    orientation = tri.orientation()
    if orientation > 0.0 and angle < -HOLONOMY_WINDING_EPSILON:
        angle += TWO_PI
    elif orientation < 0.0 and angle > HOLONOMY_WINDING_EPSILON:
        angle -= TWO_PI
    return angle


def interior_angles(tri: SphericalTriangle) -> tuple[float, float, float]:
    a, b, c = tri.vertices()
    angles = []
    for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
        u = tangent_toward(p, q)
        w = tangent_toward(p, r)
        angles.append(math.atan2(float(np.linalg.norm(np.cross(u, w))), float(np.dot(u, w))))
    return angles[0], angles[1], angles[2]


def spherical_excess(tri: SphericalTriangle) -> float:
    """Sum of the interior angles minus pi; the area of the triangle on the unit sphere."""
    return math.fsum(interior_angles(tri)) - math.pi


def oriented_excess(tri: SphericalTriangle) -> float:
    return math.copysign(spherical_excess(tri), tri.orientation())


def lhuilier_excess(tri: SphericalTriangle) -> float:
    """Spherical excess from the three side lengths."""
    a, b, c = tri.vertices()
    side_a, side_b, side_c = arc_length(b, c), arc_length(c, a), arc_length(a, b)
    s = 0.5 * (side_a + side_b + side_c)
    product = (
        math.tan(0.5 * s)
        * math.tan(0.5 * (s - side_a))
        * math.tan(0.5 * (s - side_b))
        * math.tan(0.5 * (s - side_c))
    )
    return 4.0 * math.atan(math.sqrt(max(0.0, product)))


def octant() -> SphericalTriangle:
    return SphericalTriangle(
        a=UnitVec3(x=1.0, y=0.0, z=0.0),
        b=UnitVec3(x=0.0, y=1.0, z=0.0),
        c=UnitVec3(x=0.0, y=0.0, z=1.0),
    )


def shrink_triangle(tri: SphericalTriangle, factor: float) -> SphericalTriangle:
    """Triangle scaled by `factor` towards the direction of its centroid."""
    vertices = tri.vertices()
    center = _unit(vertices[0] + vertices[1] + vertices[2])
    a, b, c = (UnitVec3.normalized(center + factor * (v - center)) for v in vertices)
    return SphericalTriangle(a=a, b=b, c=c)


def incoming_directions(tri: SphericalTriangle) -> tuple[FloatArray, FloatArray, FloatArray]:
    """Direction of travel of the perimeter on arrival at A, B and C."""
    a, b, c = tri.vertices()
    return -tangent_toward(a, c), -tangent_toward(b, a), -tangent_toward(c, b)


def reference_vectors(
    tri: SphericalTriangle, ref_angles: tuple[float, float, float]
) -> FloatArray:
    """Reference direction at each vertex, at the given angle from the incoming direction."""
    refs = []
    for vertex, incoming, angle in zip(tri.vertices(), incoming_directions(tri), ref_angles):
        refs.append(math.cos(angle) * incoming + math.sin(angle) * np.cross(vertex, incoming))
    return np.array(refs)


def transported_reference_angles(
    tri: SphericalTriangle, angle_a: float
) -> tuple[float, float, float]:
    """Reference angles whose vectors are copies of A's, transported along A -> B -> C."""
    a, b, c = tri.vertices()
    ref_a = reference_vectors(tri, (angle_a, 0.0, 0.0))[0]
    ref_b = transport_array(ref_a, a, b)
    ref_c = transport_array(ref_b, b, c)
    _, in_b, in_c = incoming_directions(tri)
    angles = [angle_a]
    for vertex, incoming, ref in ((b, in_b, ref_b), (c, in_c, ref_c)):
        angles.append(
            math.atan2(float(np.dot(ref, np.cross(vertex, incoming))), float(np.dot(ref, incoming)))
        )
    return angles[0], angles[1], angles[2]


# --- games ---------------------------------------------------------------


def _sign(x: FloatArray) -> IntArray:
    return np.where(x >= 0.0, 1, -1).astype(np.int64)


def flat_responses_array(
    theta: npt.ArrayLike, angle_ab: float, angle_ac: float
) -> tuple[IntArray, IntArray, IntArray]:
    """sign(r . lambda) for references at 0, angle_ab and angle_ac."""
    t = np.asarray(theta, dtype=np.float64)
    return _sign(np.cos(t)), _sign(np.cos(t - angle_ab)), _sign(np.cos(t - angle_ac))


def flat_correlation(angle: float) -> float:
    """Exact flat-game correlation 1 - 2|angle|/pi between two references."""
    return 1.0 - 2.0 * abs(wrap_angle(angle)) / math.pi


def _game_sums(s_a: IntArray, s_b: IntArray, s_c: IntArray) -> IntArray:
    ab, ac, bc = s_a * s_b, s_a * s_c, s_b * s_c
    violations = np.count_nonzero(np.abs(ab + ac) != 1 + bc)
    return np.array([np.sum(ab), np.sum(ac), np.sum(bc), violations], dtype=np.int64)


def _report(totals: IntArray, n: int, holonomy: float | None = None) -> GameReport:
    e_ab, e_ac, e_bc = (CorrelationEstimate.from_product_sum(int(t), n) for t in totals[:3])
    return GameReport(
        e_ab=e_ab,
        e_ac=e_ac,
        e_bc=e_bc,
        slack=1.0 + e_bc.mean - abs(e_ab.mean + e_ac.mean),
        slack_stderr=math.sqrt(e_ab.stderr**2 + e_ac.stderr**2 + e_bc.stderr**2),
        identity_violations=int(totals[3]),
        holonomy=holonomy,
    )


def _flat_kernel(
    angle_ab: float, angle_ac: float, rng: np.random.Generator, size: int
) -> IntArray:
    return _game_sums(*flat_responses_array(uniform_angles(rng, size), angle_ab, angle_ac))


def flat_game(
    angle_ab: float,
    angle_ac: float,
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> GameReport:
    """Planar game: lambda uniform on the circle, references at 0, angle_ab, angle_ac."""
    if n < 1:
        raise InvalidSampleCountError(n, minimum=1)
    runner = runner or get_runner()
    kernel = functools.partial(_flat_kernel, wrap_angle(angle_ab), wrap_angle(angle_ac))
    report = _report(runner.sum_chunks(kernel, n, stream), n)
    logger.info(f"Flat game: n={n}, slack={report.slack:.6f}")
    return report


def perimeter_draws(
    vertices: FloatArray, u: FloatArray, psi: FloatArray
) -> tuple[IntArray, FloatArray, FloatArray]:
    """Points uniform by arc length on the perimeter and tangent directions there.

    Returns the edge index k (edge k runs from vertex k to vertex k+1), the
    point x and the direction at angle psi from the direction of travel.
    """
    lengths = np.array([arc_length(vertices[k], vertices[(k + 1) % 3]) for k in range(3)])
    ends = np.cumsum(lengths)
    s = u * ends[-1]
    edge = np.minimum(np.searchsorted(ends, s, side="right"), 2)
    offset = (s - (ends - lengths)[edge])[:, None]
    start = vertices[edge]
    heading = tangent_toward(start, vertices[(edge + 1) % 3])
    x = np.cos(offset) * start + np.sin(offset) * heading
    travel = -np.sin(offset) * start + np.cos(offset) * heading
    side = np.cross(x, travel)
    lam = np.cos(psi)[:, None] * travel + np.sin(psi)[:, None] * side
    return edge.astype(np.int64), x, lam


def vertex_directions(
    vertices: FloatArray, edge: IntArray, x: FloatArray, lam: FloatArray
) -> FloatArray:
    """Transport each direction forward along the perimeter to the three vertices.

    Result has shape (3, n, 3); slot j holds the copy at vertex j.
    """
    out = np.empty((3,) + lam.shape, dtype=np.float64)
    for k in range(3):
        mask = edge == k
        if not np.any(mask):
            continue
        first, second = (k + 1) % 3, (k + 2) % 3
        v = transport_array(lam[mask], x[mask], vertices[first])
        out[first, mask] = v
        v = transport_array(v, vertices[first], vertices[second])
        out[second, mask] = v
        out[k, mask] = transport_array(v, vertices[second], vertices[k])
    return out


def _spherical_kernel(
    vertices: FloatArray, refs: FloatArray, rng: np.random.Generator, size: int
) -> IntArray:
    u = rng.random(size)
    psi = uniform_angles(rng, size)
    edge, x, lam = perimeter_draws(vertices, u, psi)
    at_vertex = vertex_directions(vertices, edge, x, lam)
    s_a, s_b, s_c = (_sign(_dot(at_vertex[j], refs[j])) for j in range(3))
    return _game_sums(s_a, s_b, s_c)


def spherical_game(
    tri: SphericalTriangle,
    ref_angles: tuple[float, float, float],
    n: int,
    stream: RngStream,
    runner: MonteCarloRunner | None = None,
) -> GameReport:
    """Perimeter game on the sphere, reported with the loop holonomy of the triangle."""
    if n < 1:
        raise InvalidSampleCountError(n, minimum=1)
    runner = runner or get_runner()
    vertices = np.array(tri.vertices())
    angles = tuple(float(a) for a in wrap_angle_array(ref_angles))
    refs = reference_vectors(tri, (angles[0], angles[1], angles[2]))
    kernel = functools.partial(_spherical_kernel, vertices, refs)
    report = _report(runner.sum_chunks(kernel, n, stream), n, holonomy=loop_holonomy(tri))
    logger.info(
        f"Spherical game: n={n}, slack={report.slack:.6f}, holonomy={report.holonomy:.6f}"
    )
    return report
