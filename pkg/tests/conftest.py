import random

import pytest

from weaktri.gf import FieldCtx
from weaktri.linalg import Mat, invert
from weaktri.spaces import MatSpace


@pytest.fixture(scope="session")
def gf3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def gf5():
    return FieldCtx(5)


@pytest.fixture(scope="session")
def gf7():
    return FieldCtx(7)


@pytest.fixture(scope="session")
def gf9():
    return FieldCtx(3, 2, (1, 0, 1))


def triangular_space(field, n):
    return MatSpace.from_span(
        [Mat.unit(field, n, i, j) for i in range(n) for j in range(i, n)],
        field=field,
        n=n,
    )


def full_space(field, n):
    return MatSpace.from_span(
        [Mat.unit(field, n, i, j) for i in range(n) for j in range(n)],
        field=field,
        n=n,
    )


def random_matrix(field, n, rng):
    return Mat(field, n, tuple(rng.randrange(field.q) for _ in range(n * n)))


def random_invertible(field, n, rng):
    while True:
        m = random_matrix(field, n, rng)
        if invert(m) is not None:
            return m


def seeded(seed):
    return random.Random(seed)
