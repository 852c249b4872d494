import pytest

from src.config import EngineLimits
from src.homological import GeneratorCache
from src.sampling import make_rng, random_spec
from src.series import Series2

from .specs import spec_from_text


@pytest.fixture
def limits():
    return EngineLimits()


@pytest.fixture
def cache():
    return GeneratorCache()


@pytest.fixture
def flat_spec():
    """phi_{0,1} = (x, y + y^2 - xy)."""
    return spec_from_text("0", "1", 8)


@pytest.fixture
def sample_spec():
    return spec_from_text("x + 1/2*y^2", "1 + x - y", 6)


@pytest.fixture
def seeded_specs():
    rng = make_rng(7)
    return [random_spec(rng, 6) for _ in range(3)]
