import numpy as np
import pytest

from app.services.cache import cache


@pytest.fixture
def seed() -> int:
    return 20240611


@pytest.fixture
def rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture
def clean_cache():
    cache.clear()
    yield cache
    cache.clear()
