import logging

import pytest

from bellsim.config import MonteCarloSettings, Settings, configure_logging
from bellsim.constants import CHUNK_SIZE
from bellsim.montecarlo import MonteCarloRunner, get_runner


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("BELLSIM_APP_NAME", "BELLSIM_LOG_LEVEL", "BELLSIM_WORKERS", "BELLSIM_MP_START_METHOD"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.app_name == "bellsim"
        assert settings.workers == 1
        assert settings.mp_start_method == "spawn"

    def test_environment_prefix(self, monkeypatch):
        monkeypatch.setenv("BELLSIM_WORKERS", "3")
        monkeypatch.setenv("BELLSIM_LOG_LEVEL", "DEBUG")
        settings = Settings(_env_file=None)
        assert settings.workers == 3
        assert settings.log_level == "DEBUG"

    def test_rejects_zero_workers(self, monkeypatch):
        monkeypatch.setenv("BELLSIM_WORKERS", "0")
        with pytest.raises(ValueError):
            Settings(_env_file=None)

    def test_monte_carlo_settings(self, monkeypatch):
        monkeypatch.setenv("BELLSIM_WORKERS", "4")
        monkeypatch.setenv("BELLSIM_MP_START_METHOD", "forkserver")
        mc = Settings(_env_file=None).monte_carlo
        assert mc == MonteCarloSettings(workers=4, chunk_size=CHUNK_SIZE, start_method="forkserver")


class TestRunner:
    def test_override_workers(self):
        assert get_runner(3).workers == 3
        assert get_runner(3).settings.chunk_size == CHUNK_SIZE

    def test_rejects_zero_workers(self):
        with pytest.raises(ValueError):
            get_runner(0)

    def test_empty_run(self, stream):
        runner = MonteCarloRunner(MonteCarloSettings(workers=2))
        assert runner.map_chunks(lambda rng, size: size, 0, stream) == []
        assert runner.concat_chunks(lambda rng, size: rng.random(size), 0, stream).size == 0

    def test_sequential_chunks_in_order(self, stream, small_chunk_runner):
        assert small_chunk_runner.map_chunks(lambda rng, size: size, 2500, stream) == [1000, 1000, 500]


class TestLogging:
    def test_configure_logging_accepts_names(self):
        configure_logging("info")
        configure_logging(None)

    def test_unknown_level_falls_back(self):
        configure_logging("chatty")
        assert logging.getLogger("scipy").level == logging.WARNING
