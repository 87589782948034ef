import pytest
from hypothesis import HealthCheck, settings

from rbenvelope.envelope import Envelope
from rbenvelope.prelie import PreLieAlgebra, build_hat

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

RUNNING = PreLieAlgebra(1, (((1,),),), "running")
UNIT2 = PreLieAlgebra(2, (((1, 0), (0, 1)), ((0, 1), (0, 0))), "unit2")
# e2 e1 = e1, all else 0: left-symmetric but not associative
NONASSOC = PreLieAlgebra(2, (((0, 0), (0, 0)), ((1, 0), (0, 0))), "nonassoc")


@pytest.fixture(scope="session")
def A1():
    return RUNNING


@pytest.fixture(scope="session")
def A2():
    return UNIT2


@pytest.fixture(scope="session")
def H1():
    return build_hat(RUNNING)


@pytest.fixture(scope="session")
def H2():
    return build_hat(UNIT2)


@pytest.fixture(scope="session")
def env1(H1):
    return Envelope(H1)


@pytest.fixture(scope="session")
def env2(H2):
    return Envelope(H2)
