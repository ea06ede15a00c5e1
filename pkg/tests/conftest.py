import random

import pytest

from hesse_flow.config import RunConfig


@pytest.fixture
def rng() -> random.Random:
    return random.Random(RunConfig().seed)
