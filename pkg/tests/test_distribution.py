import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, stats

from bellsim.config import MonteCarloSettings
from bellsim.distribution.constants import MAX_KEY_WORD
from bellsim.distribution.exceptions import InvalidSampleCountError
from bellsim.distribution.schemas import HiddenConfig, RngStream
from bellsim.distribution.services import (
    bin_masses,
    cdf,
    cdf_array,
    density,
    interval_mass,
    inverse_cdf,
    inverse_cdf_array,
    sample,
    sample_array,
)
from bellsim.montecarlo import MonteCarloRunner, chunk_sizes

PI = math.pi


class TestDensity:
    @pytest.mark.parametrize("lam, expected", [(PI / 2, 0.25), (0.0, 0.0), (-PI / 2, 0.25)])
    def test_examples(self, lam, expected):
        assert density(lam) == pytest.approx(expected, abs=1e-15)

    def test_normalised(self):
        total, _ = integrate.quad(density, -PI, PI, points=[0.0])
        assert total == pytest.approx(1.0, abs=1e-10)

    @given(st.floats(min_value=-PI, max_value=PI, exclude_max=True))
    def test_even(self, lam):
        assert density(lam) == pytest.approx(density(-lam))


class TestCdf:
    @pytest.mark.parametrize(
        "lam, expected", [(-PI, 0.0), (-PI / 2, 0.25), (0.0, 0.5), (PI / 2, 0.75)]
    )
    def test_examples(self, lam, expected):
        assert cdf(lam) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("upper", [-2.5, -1.0, -0.1, 0.3, 1.7, 3.0])
    def test_matches_quadrature(self, upper):
        mass, _ = integrate.quad(density, -PI, upper, points=[0.0] if upper > 0 else None)
        assert cdf(upper) == pytest.approx(mass, abs=1e-10)

    def test_increasing(self):
        lam = np.linspace(-PI, PI, 2001)[:-1]
        assert np.all(np.diff(cdf_array(lam)) >= 0.0)

    def test_interval_mass(self):
        assert interval_mass(-PI, PI) == pytest.approx(1.0)
        assert interval_mass(0.0, PI) == pytest.approx(0.5)
        assert interval_mass(-PI / 2, PI / 2) == pytest.approx(0.5)
        assert interval_mass(1.0, 1.0) == 0.0


class TestInverseCdf:
    @pytest.mark.parametrize(
        "u, expected", [(0.0, -PI), (0.25, -PI / 2), (0.5, 0.0), (0.75, PI / 2)]
    )
    def test_examples(self, u, expected):
        assert inverse_cdf(u) == pytest.approx(expected, abs=1e-12)

    @given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True))
    def test_inverts_cdf(self, u):
        lam = inverse_cdf(u)
        assert -PI <= lam < PI
        assert cdf(lam) == pytest.approx(u, abs=1e-12)

    def test_monotone(self):
        u = np.linspace(0.0, 1.0, 4001)[:-1]
        assert np.all(np.diff(inverse_cdf_array(u)) > 0.0)


class TestRngStream:
    def test_rejects_negative_seed(self):
        with pytest.raises(ValueError):
            RngStream(seed=-1)

    def test_rejects_oversized_seed(self):
        with pytest.raises(ValueError):
            RngStream(seed=MAX_KEY_WORD + 1)

    def test_generator_is_reproducible(self):
        first = RngStream(seed=5, stream_index=2).generator(3).random(10)
        second = RngStream(seed=5, stream_index=2).generator(3).random(10)
        assert np.array_equal(first, second)

    def test_chunks_and_streams_differ(self):
        base = RngStream(seed=5)
        draws = [
            base.generator(0).random(4),
            base.generator(1).random(4),
            base.substream(1).generator(0).random(4),
            RngStream(seed=6).generator(0).random(4),
        ]
        for i in range(len(draws)):
            for j in range(i + 1, len(draws)):
                assert not np.array_equal(draws[i], draws[j])

    def test_substream_wraps_the_key_word(self):
        stream = RngStream(seed=1, stream_index=MAX_KEY_WORD)
        assert stream.substream(1).stream_index == 0


class TestSampling:
    def test_sample_models(self, stream):
        configs = sample(stream, 5)
        assert len(configs) == 5
        assert all(isinstance(c, HiddenConfig) for c in configs)
        assert all(-PI <= c.lambda_ < PI for c in configs)

    def test_zero_draws(self, stream):
        assert sample_array(stream, 0).size == 0

    def test_negative_count_rejected(self, stream):
        with pytest.raises(InvalidSampleCountError):
            sample_array(stream, -1)

    def test_deterministic(self, stream, runner):
        assert np.array_equal(sample_array(stream, 1000, runner), sample_array(stream, 1000, runner))

    def test_seed_changes_draws(self, runner):
        first = sample_array(RngStream(seed=1), 100, runner)
        second = sample_array(RngStream(seed=2), 100, runner)
        assert not np.array_equal(first, second)

    def test_chunk_k_uses_generator_k(self, stream, small_chunk_runner):
        draws = sample_array(stream, 2500, small_chunk_runner)
        for k, start in enumerate((0, 1000, 2000)):
            size = min(1000, 2500 - start)
            expected = inverse_cdf_array(stream.generator(k).random(size))
            assert np.array_equal(draws[start : start + size], expected)

    def test_worker_count_does_not_change_draws(self, stream):
        sequential = MonteCarloRunner(MonteCarloSettings(workers=1, chunk_size=1000))
        parallel = MonteCarloRunner(MonteCarloSettings(workers=2, chunk_size=1000))
        assert np.array_equal(
            sample_array(stream, 3500, sequential), sample_array(stream, 3500, parallel)
        )

    def test_histogram_matches_bin_masses(self, runner):
        n = 200_000
        draws = sample_array(RngStream(seed=11), n, runner)
        counts, _ = np.histogram(draws, bins=16, range=(-PI, PI))
        expected = bin_masses(16) * n
        _, p_value = stats.chisquare(counts, expected)
        assert p_value > 1e-6

    @pytest.mark.slow
    def test_chi_square_on_64_bins(self, runner):
        n, bins = 1_000_000, 64
        draws = sample_array(RngStream(seed=0), n, runner)
        counts, _ = np.histogram(draws, bins=bins, range=(-PI, PI))
        expected = bin_masses(bins) * n
        statistic = float(np.sum((counts - expected) ** 2 / expected))
        assert statistic < stats.chi2.ppf(0.999, df=bins - 1)

    def test_agrees_with_rejection_sampling(self, runner):
        rng = np.random.default_rng(99)
        candidates = rng.uniform(-PI, PI, 400_000)
        accepted = candidates[rng.random(candidates.size) < np.abs(np.sin(candidates))]
        draws = sample_array(RngStream(seed=12), 50_000, runner)
        _, p_value = stats.ks_2samp(draws, accepted[:50_000])
        assert p_value > 1e-6


class TestBinMasses:
    def test_sum_to_one(self):
        assert math.fsum(bin_masses(64)) == pytest.approx(1.0, abs=1e-12)

    def test_symmetric(self):
        masses = bin_masses(8)
        assert np.allclose(masses, masses[::-1], atol=1e-15)

    def test_two_halves(self):
        assert np.allclose(bin_masses(2), [0.5, 0.5])


class TestChunking:
    @pytest.mark.parametrize(
        "n, size, expected",
        [(0, 10, []), (10, 10, [10]), (25, 10, [10, 10, 5]), (3, 10, [3])],
    )
    def test_chunk_sizes(self, n, size, expected):
        assert chunk_sizes(n, size) == expected
