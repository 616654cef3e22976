import pytest

from wsteenrod import MilnorAlgebra, algebra


@pytest.fixture(scope="session")
def alg16() -> MilnorAlgebra:
    return algebra(16)


@pytest.fixture(scope="session")
def alg24() -> MilnorAlgebra:
    return algebra(24)


@pytest.fixture(scope="session")
def alg30() -> MilnorAlgebra:
    return algebra(30)
