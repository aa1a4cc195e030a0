# tests/conftest.py
import random

import pytest

from core.config import Settings
from services.symprod import build_params


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def params_factory():
    def make(g, d, n=None, **kwargs):
        return build_params(g, d, n=n, **kwargs)
    return make


@pytest.fixture
def default_settings():
    return Settings()
