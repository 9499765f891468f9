import random
from fractions import Fraction

import pytest

from cotoeplitz import (
    DividedPower,
    GaussianRational,
    ManinPlane,
    MatrixCoalgebra,
    NegativeDegree,
)

Q_DEFAULT = GaussianRational(Fraction(2, 3))


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def manin():
    return ManinPlane(Q_DEFAULT)


@pytest.fixture
def divpow():
    return DividedPower()


@pytest.fixture
def negdeg3():
    return NegativeDegree(3)


@pytest.fixture
def matrix3():
    return MatrixCoalgebra(3)
