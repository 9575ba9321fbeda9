import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellsim.chsh.constants import CLASSICAL_BOUND, PER_CONFIG_VALUES, TSIRELSON_BOUND
from bellsim.chsh.exceptions import InvalidCorrelationError, InvalidGridError, NonBinaryOutcomeError
from bellsim.chsh.schemas import ChshEstimate, ChshSettings, CycleParams
from bellsim.chsh.services import (
    chsh_statistic,
    classical_chsh,
    classical_chsh_mc,
    compose_settings,
    geometric_phase_profile,
    holonomy_cycle,
    holonomy_cycle_array,
    model_chsh,
    per_config_classical,
    per_config_distribution,
    per_config_mean,
    per_config_midpoint_mean,
    per_config_model,
    per_config_model_array,
    response_breakpoints,
    setting_chain,
    tsirelson_scan,
)
from bellsim.constants import TWO_PI
from bellsim.distribution.schemas import RngStream
from bellsim.enums import TransformLaw
from bellsim.transform.utils import circle_distance_array

PI = math.pi
SQRT2 = math.sqrt(2.0)
angles = st.floats(min_value=-PI, max_value=PI, exclude_max=True)
chsh_settings = st.builds(ChshSettings, delta1=angles, delta2=angles, delta=angles, phi=angles)


def _offset_grid(points: int) -> np.ndarray:
    return -PI + TWO_PI * (np.arange(points) + 0.5) / points


class TestStatistic:
    @pytest.mark.parametrize(
        "correlations, expected",
        [
            ((1.0, 1.0, 1.0, -1.0), 4.0),
            ((0.0, 0.0, 0.0, 0.0), 0.0),
            ((-SQRT2 / 2, -SQRT2 / 2, -SQRT2 / 2, SQRT2 / 2), -2 * SQRT2),
        ],
    )
    def test_examples(self, correlations, expected):
        assert chsh_statistic(*correlations) == pytest.approx(expected, abs=1e-12)

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidCorrelationError):
            chsh_statistic(1.5, 0.0, 0.0, 0.0)


class TestModelChsh:
    def test_tsirelson_point(self, tsirelson_settings):
        assert model_chsh(tsirelson_settings) == pytest.approx(-2 * SQRT2, abs=1e-9)

    @pytest.mark.parametrize(
        "d1, d2, delta, expected", [(0.0, 0.0, 0.0, -2.0), (PI / 2, PI / 2, 0.0, 0.0)]
    )
    def test_examples(self, d1, d2, delta, expected):
        settings_ = ChshSettings(delta1=d1, delta2=d2, delta=delta)
        assert model_chsh(settings_) == pytest.approx(expected, abs=1e-12)

    @given(chsh_settings)
    def test_never_beyond_tsirelson(self, settings_):
        assert abs(model_chsh(settings_)) <= TSIRELSON_BOUND + 1e-9

    def test_phase_shifts_every_pair(self):
        shifted = ChshSettings(delta1=PI / 4 + 0.3, delta2=-PI / 4 + 0.3, delta=PI / 2, phi=0.3)
        assert model_chsh(shifted) == pytest.approx(-2 * SQRT2, abs=1e-9)


class TestClassical:
    def test_per_config_values(self):
        for outcomes in itertools.product((1, -1), repeat=4):
            assert per_config_classical(*outcomes) in (2, -2)

    @pytest.mark.parametrize(
        "outcomes, expected",
        [((1, 1, 1, 1), 2), ((1, -1, 1, -1), -2), ((-1, 1, 1, 1), -2)],
    )
    def test_examples(self, outcomes, expected):
        assert per_config_classical(*outcomes) == expected

    def test_rejects_non_binary(self):
        with pytest.raises(NonBinaryOutcomeError):
            per_config_classical(1, 0, 1, 1)

    @given(chsh_settings)
    def test_classical_bound(self, settings_):
        assert abs(classical_chsh(settings_)) <= CLASSICAL_BOUND + 1e-12

    def test_classical_at_tsirelson_settings(self, tsirelson_settings):
        assert classical_chsh(tsirelson_settings) == pytest.approx(-2.0)

    def test_monte_carlo_matches_exact(self, stream, runner):
        settings_ = ChshSettings(delta1=0.3, delta2=-1.1, delta=0.9, phi=0.2)
        estimate = classical_chsh_mc(settings_, 100_000, stream, runner)
        assert abs(estimate.mean - classical_chsh(settings_)) <= 4 * estimate.stderr + 1e-12

    @pytest.mark.parametrize("n", [10_000, pytest.param(100_000, marks=pytest.mark.slow)])
    def test_monte_carlo_respects_bound(self, n, runner):
        rng = np.random.default_rng(17)
        stream = RngStream(seed=17)
        for i in range(100):
            d1, d2, delta = rng.uniform(-PI, PI, 3)
            settings_ = ChshSettings(delta1=d1, delta2=d2, delta=delta)
            estimate = classical_chsh_mc(settings_, n, stream.substream(i), runner)
            assert abs(estimate.mean) <= CLASSICAL_BOUND + 4 * estimate.stderr

    def test_estimate_variance(self):
        estimate = ChshEstimate.from_binary_sum(100, 100)
        assert estimate.mean == 1.0
        assert estimate.stderr == pytest.approx(math.sqrt(3.0 / 100))


class TestPerConfig:
    def test_trivial_settings(self):
        settings_ = ChshSettings(delta1=0.0, delta2=0.0, delta=0.0)
        values = per_config_model_array(_offset_grid(4096), settings_)
        assert np.all(values == -2)

    def test_values(self, tsirelson_settings):
        values = per_config_model_array(_offset_grid(4096), tsirelson_settings)
        assert set(np.unique(values)) <= set(PER_CONFIG_VALUES)

    def test_leaves_the_local_interval(self, tsirelson_settings):
        lam = -PI + TWO_PI * np.arange(4096) / 4096
        values = per_config_model_array(lam, tsirelson_settings)
        assert np.max(np.abs(values)) == 4

    def test_scalar_form(self, tsirelson_settings):
        lam = 0.4
        assert per_config_model(lam, tsirelson_settings) == int(
            per_config_model_array(np.array([lam]), tsirelson_settings)[0]
        )

    def test_breakpoints(self, tsirelson_settings):
        points = response_breakpoints(tsirelson_settings)
        assert points[0] == -PI
        assert 0.0 in points
        assert np.all(np.diff(points) > 0.0)
        assert np.all(points < PI)

    def test_distribution(self, tsirelson_settings):
        distribution = per_config_distribution(tsirelson_settings)
        assert distribution.total == pytest.approx(1.0, abs=1e-12)
        assert [m.value for m in distribution.masses] == list(PER_CONFIG_VALUES)
        assert all(m.weight >= -1e-15 for m in distribution.masses)

    def test_exact_mean_at_tsirelson_settings(self, tsirelson_settings):
        assert per_config_mean(tsirelson_settings) == pytest.approx(-2 * SQRT2, abs=1e-9)

    @settings(max_examples=25)
    @given(chsh_settings)
    def test_exact_mean_is_the_chsh_combination(self, settings_):
        assert per_config_mean(settings_) == pytest.approx(model_chsh(settings_), abs=1e-9)

    def test_midpoint_quadrature(self, tsirelson_settings):
        assert per_config_midpoint_mean(tsirelson_settings) == pytest.approx(
            -2 * SQRT2, abs=1e-4
        )

    def test_quadrature_needs_points(self, tsirelson_settings):
        with pytest.raises(InvalidGridError):
            per_config_midpoint_mean(tsirelson_settings, points=0)


class TestHolonomy:
    def test_trivial_cycle_is_identity(self):
        profile = geometric_phase_profile(CycleParams(), grid_n=4096)
        assert profile.sup < 1e-9

    def test_linear_law_cycle_is_identity(self):
        rng = np.random.default_rng(5)
        for d1, d2, dd in rng.uniform(-PI, PI, (20, 3)):
            params = CycleParams(d1=d1, d2=d2, dd=dd)
            profile = geometric_phase_profile(params, grid_n=4096, law=TransformLaw.LINEAR)
            assert profile.sup < 1e-9

    def test_geometric_phase_at_tsirelson_settings(self):
        params = CycleParams(d1=PI / 4, d2=-PI / 4, dd=PI / 2)
        profile = geometric_phase_profile(params, grid_n=4096)
        assert profile.sup > 0.1
        assert len(profile.points) == 4096
        worst = max(profile.points, key=lambda p: p.defect)
        assert worst.defect == profile.sup
        assert worst.lambda_ == profile.argsup

    def test_scalar_and_array_forms_agree(self):
        params = CycleParams(d1=0.3, d2=-1.2, dd=2.0)
        lam = 1.1
        assert holonomy_cycle(lam, params) == float(holonomy_cycle_array(np.array(lam), params))

    def test_cycle_stays_on_the_circle(self):
        params = CycleParams(d1=0.3, d2=-1.2, dd=2.0)
        values = holonomy_cycle_array(_offset_grid(512), params)
        assert np.all((values >= -PI) & (values < PI))

    def test_defect_is_circle_distance(self):
        params = CycleParams(d1=0.9, d2=0.1, dd=-0.7)
        profile = geometric_phase_profile(params, grid_n=16)
        for point in profile.points:
            expected = float(circle_distance_array(holonomy_cycle(point.lambda_, params), point.lambda_))
            assert point.defect == pytest.approx(expected, abs=1e-12)

    def test_rejects_tiny_grid(self):
        with pytest.raises(InvalidGridError):
            geometric_phase_profile(CycleParams(), grid_n=1)


class TestSettingComposition:
    @pytest.mark.parametrize(
        "a, b, expected", [(PI / 3, PI / 3, 2 * PI / 3), (PI, PI, 0.0), (2.0, 2.0, 4.0 - TWO_PI)]
    )
    def test_compose(self, a, b, expected):
        assert compose_settings(a, b) == pytest.approx(expected, abs=1e-12)

    def test_chain(self):
        chain = setting_chain(0.3, 0.5, 0.2)
        assert chain.t0 == pytest.approx(-0.2)
        assert chain.t1 == pytest.approx(0.1)
        assert chain.t2 == pytest.approx(0.6)
        assert chain.t3 == pytest.approx(0.3)
        assert chain.t4 == pytest.approx(0.8)

    def test_chain_without_source_phase(self):
        chain = setting_chain(1.0, -2.5, 0.0)
        assert chain.t0 == 0.0
        assert chain.t1 == pytest.approx(chain.t3)
        assert chain.t2 == pytest.approx(chain.t4)

    def test_chain_wraps(self):
        chain = setting_chain(3.0, 3.0, -1.0)
        for value in (chain.t0, chain.t1, chain.t2, chain.t3, chain.t4):
            assert -PI <= value < PI


class TestTsirelsonScan:
    def test_grid_reaches_the_bound(self):
        scan = tsirelson_scan(32)
        assert scan.grid_n == 32
        assert scan.max_abs <= TSIRELSON_BOUND + 1e-9
        assert scan.max_abs == pytest.approx(TSIRELSON_BOUND, abs=1e-9)
        assert abs(model_chsh(scan.argmax)) == pytest.approx(scan.max_abs, abs=1e-9)

    def test_coarse_grid_stays_below(self):
        scan = tsirelson_scan(5)
        assert scan.max_abs <= TSIRELSON_BOUND + 1e-9

    def test_rejects_empty_grid(self):
        with pytest.raises(InvalidGridError):
            tsirelson_scan(0)
