import math
import os

import pytest
from hypothesis import settings

from bellsim.chsh.schemas import ChshSettings
from bellsim.config import MonteCarloSettings
from bellsim.distribution.schemas import RngStream
from bellsim.montecarlo import MonteCarloRunner

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def stream() -> RngStream:
    return RngStream(seed=0)


@pytest.fixture
def runner() -> MonteCarloRunner:
    return MonteCarloRunner(MonteCarloSettings(workers=1))


@pytest.fixture
def small_chunk_runner() -> MonteCarloRunner:
    """Runner whose chunks are small enough to split test-sized runs."""
    return MonteCarloRunner(MonteCarloSettings(workers=1, chunk_size=1000))


@pytest.fixture
def tsirelson_settings() -> ChshSettings:
    return ChshSettings(delta1=math.pi / 4, delta2=-math.pi / 4, delta=math.pi / 2)
