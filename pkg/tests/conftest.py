import random

import pytest
from hypothesis import HealthCheck, settings

from coxtoric.corpus import corpus_fans

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return corpus_fans()


@pytest.fixture
def rng():
    return random.Random(0x5EED)
