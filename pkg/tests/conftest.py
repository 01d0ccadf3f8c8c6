import pytest
from hypothesis import HealthCheck, settings

from slocc.state import make_state

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example, HealthCheck.data_too_large])
settings.load_profile("default")


@pytest.fixture
def ghz():
    return make_state(4, [(0, 1), (15, 1)])
