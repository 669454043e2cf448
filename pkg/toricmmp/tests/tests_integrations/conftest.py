import pytest

from toricmmp.utils import from_currsys, get_rng
from toricmmp.tests.mocks.py_objects.fan_objects import _random_pair


@pytest.fixture(scope="module")
def random_pairs():
    rng = get_rng()
    n = from_currsys("!SIM.tests.n_random_instances")
    return [_random_pair(rng) for _ in range(n)]


@pytest.fixture(scope="module")
def random_free_pairs():
    rng = get_rng()
    n = from_currsys("!SIM.tests.n_random_instances")
    return [_random_pair(rng, with_boundary=False) for _ in range(n)]
