import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "workbench", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("workbench")


@pytest.fixture
def sierpinski():
    from sctop import sierpinski
    return sierpinski()


@pytest.fixture
def vee():
    """Three points a, b below a common top t."""
    from sctop import elaborate, parse_space
    return elaborate(parse_space("finite { elems: a, b, t; leq: a < t, b < t }"))


@pytest.fixture
def chain3():
    from sctop import FinPoset, alexandroff
    return alexandroff(FinPoset.chain(3))


@pytest.fixture
def discrete2():
    from sctop import FinPoset, alexandroff
    return alexandroff(FinPoset.antichain(2))


@pytest.fixture
def empty_space():
    from sctop import FinSpace
    return FinSpace(0, [0])
