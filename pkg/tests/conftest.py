import random

import pytest

from app.qcoeff import RatFunc
from app.qmatrix import get_algebra


@pytest.fixture
def alg11():
    return get_algebra(1, 1)


@pytest.fixture
def alg12():
    return get_algebra(1, 2)


@pytest.fixture
def alg21():
    return get_algebra(2, 1)


@pytest.fixture
def alg22():
    return get_algebra(2, 2)


@pytest.fixture
def alg33():
    return get_algebra(3, 3)


@pytest.fixture
def x22(alg22):
    """Generators of the 2x2 algebra keyed by name"""
    return {alg22.var_name(v): alg22.generator(*alg22.position(v)) for v in range(alg22.nvars)}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def make_element():
    """Builds random linear combinations of products of generators"""

    def build(algebra, rng, max_degree=3, max_terms=2):
        out = algebra.zero()
        for _ in range(rng.randint(1, max_terms)):
            word = [algebra.generator(*rng.choice(algebra.generators())) for _ in range(rng.randint(0, max_degree))]
            coeff = RatFunc.q_power(rng.randint(-2, 2)) * rng.choice([1, -1, 2, 3])
            out = out + algebra.product(word) * coeff
        return out

    return build
