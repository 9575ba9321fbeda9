import math

import numpy as np
import pytest

from bellsim.config import MonteCarloSettings
from bellsim.distribution.exceptions import InvalidSampleCountError
from bellsim.distribution.schemas import RngStream
from bellsim.montecarlo import MonteCarloRunner
from bellsim.trianglegame.exceptions import AntipodalTransportError
from bellsim.trianglegame.schemas import SphericalTriangle, TangentVector, UnitVec3
from bellsim.trianglegame.services import (
    flat_correlation,
    flat_game,
    flat_responses_array,
    interior_angles,
    lhuilier_excess,
    loop_holonomy,
    octant,
    oriented_excess,
    perimeter_draws,
    reference_vectors,
    shrink_triangle,
    spherical_excess,
    spherical_game,
    transport,
    transport_array,
    transported_reference_angles,
    vertex_directions,
)

PI = math.pi
E_X = UnitVec3(x=1.0, y=0.0, z=0.0)
E_Y = UnitVec3(x=0.0, y=1.0, z=0.0)
E_Z = UnitVec3(x=0.0, y=0.0, z=1.0)


def _random_triangles(count: int, seed: int) -> list[SphericalTriangle]:
    rng = np.random.default_rng(seed)
    triangles = []
    while len(triangles) < count:
        a, b, c = (UnitVec3.normalized(v) for v in rng.normal(size=(3, 3)))
        tri = SphericalTriangle(a=a, b=b, c=c)
        vertices = tri.vertices()
        well_separated = all(
            abs(float(np.dot(vertices[i], vertices[(i + 1) % 3]))) < 0.99 for i in range(3)
        )
        if well_separated and abs(tri.orientation()) > 0.05 and spherical_excess(tri) < 6.0:
            triangles.append(tri)
    return triangles


class TestSchemas:
    def test_rejects_non_unit_vector(self):
        with pytest.raises(ValueError):
            UnitVec3(x=2.0, y=0.0, z=0.0)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            UnitVec3(x=float("nan"), y=0.0, z=0.0)

    def test_normalized(self):
        assert UnitVec3.normalized(np.array([0.0, 3.0, 4.0])) == UnitVec3(x=0.0, y=0.6, z=0.8)

    def test_rejects_non_tangent_direction(self):
        with pytest.raises(ValueError):
            TangentVector(base=E_Z, dir=E_Z)

    def test_rejects_repeated_vertex(self):
        with pytest.raises(ValueError):
            SphericalTriangle(a=E_X, b=E_X, c=E_Z)

    def test_rejects_great_circle(self):
        on_equator = UnitVec3.normalized(np.array([1.0, 1.0, 0.0]))
        with pytest.raises(ValueError):
            SphericalTriangle(a=E_X, b=E_Y, c=on_equator)

    def test_orientation(self):
        assert octant().orientation() == pytest.approx(1.0)
        assert SphericalTriangle(a=E_X, b=E_Z, c=E_Y).orientation() == pytest.approx(-1.0)


class TestTransport:
    def test_identity(self):
        v = TangentVector(base=E_Z, dir=E_X)
        assert transport(v, E_Z) == v

    def test_quarter_turn(self):
        moved = transport(TangentVector(base=E_Z, dir=E_X), E_X)
        assert moved.base == E_X
        assert np.allclose(moved.dir.array, [0.0, 0.0, -1.0], atol=1e-15)

    def test_direction_along_a_transverse_arc_is_kept(self):
        moved = transport_array([0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
        assert np.allclose(moved, [0.0, 0.0, 1.0], atol=1e-15)

    def test_preserves_norm_and_tangency(self):
        rng = np.random.default_rng(4)
        base = rng.normal(size=(50, 3))
        base /= np.linalg.norm(base, axis=1, keepdims=True)
        to = rng.normal(size=(50, 3))
        to /= np.linalg.norm(to, axis=1, keepdims=True)
        dirs = np.cross(base, rng.normal(size=(50, 3)))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        moved = transport_array(dirs, base, to)
        assert np.allclose(np.linalg.norm(moved, axis=1), 1.0, atol=1e-12)
        assert np.allclose(np.sum(moved * to, axis=1), 0.0, atol=1e-12)

    def test_rejects_antipodal_points(self):
        with pytest.raises(AntipodalTransportError):
            transport_array([0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [-1.0, 0.0, 0.0])


class TestHolonomy:
    def test_octant(self):
        tri = octant()
        assert interior_angles(tri) == pytest.approx((PI / 2,) * 3, abs=1e-12)
        assert spherical_excess(tri) == pytest.approx(PI / 2, abs=1e-9)
        assert loop_holonomy(tri) == pytest.approx(PI / 2, abs=1e-9)

    def test_reversed_octant(self):
        tri = SphericalTriangle(a=E_X, b=E_Z, c=E_Y)
        assert loop_holonomy(tri) == pytest.approx(-PI / 2, abs=1e-9)
        assert oriented_excess(tri) == pytest.approx(-PI / 2, abs=1e-9)

    def test_holonomy_is_the_oriented_excess(self):
        for tri in _random_triangles(100, seed=2):
            assert loop_holonomy(tri) == pytest.approx(oriented_excess(tri), abs=1e-9)

    def test_side_length_formula(self):
        for tri in _random_triangles(100, seed=3):
            assert lhuilier_excess(tri) == pytest.approx(spherical_excess(tri), abs=1e-9)

    def test_small_triangles_are_nearly_flat(self):
        tri = shrink_triangle(octant(), 1e-3)
        assert 0.0 < spherical_excess(tri) < 1e-5
        assert loop_holonomy(tri) == pytest.approx(oriented_excess(tri), abs=1e-9)


class TestReferences:
    def test_reference_angle_zero_is_the_incoming_direction(self):
        tri = octant()
        refs = reference_vectors(tri, (0.0, 0.0, 0.0))
        # A is reached along C -> A, B along A -> B
        assert np.allclose(refs[0], [0.0, 0.0, -1.0], atol=1e-15)
        assert np.allclose(refs[1], [-1.0, 0.0, 0.0], atol=1e-15)

    def test_transported_references(self):
        tri = _random_triangles(1, seed=9)[0]
        a, b, c = tri.vertices()
        angles = transported_reference_angles(tri, 0.3)
        assert angles[0] == 0.3
        refs = reference_vectors(tri, angles)
        assert np.allclose(refs[1], transport_array(refs[0], a, b), atol=1e-12)
        assert np.allclose(refs[2], transport_array(refs[1], b, c), atol=1e-12)


class TestFlatGame:
    def test_responses(self):
        s_a, s_b, s_c = flat_responses_array(np.array([0.1, PI / 2 + 0.1]), PI / 2, -PI / 2)
        assert s_a.tolist() == [1, -1]
        assert s_b.tolist() == [1, 1]
        assert s_c.tolist() == [-1, -1]

    @pytest.mark.parametrize("angle, expected", [(0.0, 1.0), (PI / 2, 0.0), (PI, -1.0), (-PI / 3, 1 / 3)])
    def test_exact_correlation(self, angle, expected):
        assert flat_correlation(angle) == pytest.approx(expected, abs=1e-15)

    def test_aligned_references(self, stream, runner):
        report = flat_game(0.0, 0.0, 10_000, stream, runner)
        assert (report.e_ab.mean, report.e_ac.mean, report.e_bc.mean) == (1.0, 1.0, 1.0)
        assert report.slack == 0.0
        assert report.holonomy is None

    def test_equilateral_references(self, stream, runner):
        report = flat_game(2 * PI / 3, -2 * PI / 3, 100_000, stream, runner)
        for estimate in (report.e_ab, report.e_ac, report.e_bc):
            assert estimate.within(-1 / 3, 4.0)
        assert report.slack >= -1e-12
        assert report.identity_violations == 0

    @pytest.mark.parametrize("angle_ab, angle_ac", [(PI / 3, -PI / 2), (2.5, 0.4), (-1.0, 3.0)])
    def test_agrees_with_exact(self, angle_ab, angle_ac, stream, runner):
        report = flat_game(angle_ab, angle_ac, 100_000, stream, runner)
        assert report.e_ab.within(flat_correlation(angle_ab), 4.0)
        assert report.e_ac.within(flat_correlation(angle_ac), 4.0)
        assert report.e_bc.within(flat_correlation(angle_ac - angle_ab), 4.0)
        assert report.slack >= -1e-12

    def test_slack_at_random_settings(self, stream, runner):
        rng = np.random.default_rng(50)
        for i in range(50):
            angle_ab, angle_ac = rng.uniform(-PI, PI, 2)
            report = flat_game(angle_ab, angle_ac, 20_000, stream.substream(i), runner)
            assert report.slack >= -4.0 * report.slack_stderr

    def test_worker_count_does_not_change_report(self, stream):
        sequential = MonteCarloRunner(MonteCarloSettings(workers=1, chunk_size=1000))
        parallel = MonteCarloRunner(MonteCarloSettings(workers=2, chunk_size=1000))
        assert flat_game(1.0, -2.0, 4321, stream, sequential) == flat_game(
            1.0, -2.0, 4321, stream, parallel
        )

    def test_rejects_empty_game(self, stream):
        with pytest.raises(InvalidSampleCountError):
            flat_game(0.0, 0.0, 0, stream)

    @pytest.mark.slow
    def test_identity_holds_for_every_draw(self, runner):
        report = flat_game(0.7, -2.2, 1_000_000, RngStream(seed=3), runner)
        assert report.identity_violations == 0
        assert report.slack >= -1e-12


class TestSphericalGame:
    def test_perimeter_draws(self):
        tri = octant()
        vertices = np.array(tri.vertices())
        rng = np.random.default_rng(6)
        edge, x, lam = perimeter_draws(vertices, rng.random(500), rng.uniform(-PI, PI, 500))
        assert set(edge.tolist()) == {0, 1, 2}
        assert np.allclose(np.linalg.norm(x, axis=1), 1.0, atol=1e-12)
        assert np.allclose(np.sum(x * lam, axis=1), 0.0, atol=1e-12)
        # every octant edge lies in a coordinate plane
        for k in range(3):
            normal = np.cross(vertices[k], vertices[(k + 1) % 3])
            assert np.allclose(x[edge == k] @ normal, 0.0, atol=1e-12)

    def test_vertex_directions_are_tangent(self):
        tri = _random_triangles(1, seed=10)[0]
        vertices = np.array(tri.vertices())
        rng = np.random.default_rng(7)
        edge, x, lam = perimeter_draws(vertices, rng.random(300), rng.uniform(-PI, PI, 300))
        at_vertex = vertex_directions(vertices, edge, x, lam)
        for j in range(3):
            assert np.allclose(at_vertex[j] @ vertices[j], 0.0, atol=1e-12)
            assert np.allclose(np.linalg.norm(at_vertex[j], axis=1), 1.0, atol=1e-12)

    def test_octant(self, stream, runner):
        report = spherical_game(octant(), (0.0, 2 * PI / 3, -2 * PI / 3), 50_000, stream, runner)
        assert report.holonomy == pytest.approx(PI / 2, abs=1e-9)
        assert report.identity_violations == 0
        assert report.slack >= -1e-12

    def test_random_triangles(self, stream, runner):
        rng = np.random.default_rng(12)
        for i, tri in enumerate(_random_triangles(5, seed=12)):
            refs = tuple(rng.uniform(-PI, PI, 3))
            report = spherical_game(tri, refs, 5_000, stream.substream(i), runner)
            assert report.identity_violations == 0
            assert report.slack >= -1e-12
            assert report.holonomy == pytest.approx(loop_holonomy(tri), abs=1e-15)

    def test_small_triangle_with_transported_references(self, stream, runner):
        tri = shrink_triangle(octant(), 1e-3)
        refs = transported_reference_angles(tri, 0.3)
        report = spherical_game(tri, refs, 20_000, stream, runner)
        for estimate in (report.e_ab, report.e_ac, report.e_bc):
            assert estimate.mean > 0.99

    def test_octant_with_transported_references(self, stream, runner):
        tri = octant()
        refs = transported_reference_angles(tri, 0.3)
        report = spherical_game(tri, refs, 200_000, stream, runner)
        assert report.holonomy == pytest.approx(PI / 2, abs=1e-9)
        # the loop closes a quarter turn short, so A and C never line up
        assert report.e_ac.mean < 0.5
        assert report.e_ab.mean < 0.9
        assert report.e_bc.mean < 0.9
        assert report.slack >= -1e-12

    def test_rejects_empty_game(self, stream):
        with pytest.raises(InvalidSampleCountError):
            spherical_game(octant(), (0.0, 0.0, 0.0), 0, stream)
