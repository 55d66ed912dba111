import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


from redcor.rings import IntegerRing, ModularRing, PolynomialRing, PrimeField, RationalField


@pytest.fixture
def zz():
    return IntegerRing()


@pytest.fixture
def z6():
    return ModularRing(6)


@pytest.fixture
def z4():
    return ModularRing(4)


@pytest.fixture
def z8():
    return ModularRing(8)


@pytest.fixture
def qxy():
    return PolynomialRing(RationalField(), ("x", "y"), "grevlex")


@pytest.fixture
def qx():
    return PolynomialRing(RationalField(), ("x",), "grevlex")


@pytest.fixture
def f2xy():
    return PolynomialRing(PrimeField(2), ("x", "y"), "grevlex")
