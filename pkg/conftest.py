import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from fixtures import k4 as k4_fixture  # noqa: E402
from matroids.io import matroid_from_json  # noqa: E402
from suites.common import DEFAULT_SEED  # noqa: E402


@pytest.fixture
def k4():
    return matroid_from_json(k4_fixture.get_matroid())


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)
