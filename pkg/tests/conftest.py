import numpy as np
import pytest
from hypothesis import strategies as st

from solv3.algebra import Triple


def random_triple(rng, scale=2.0) -> Triple:
    a = rng.uniform(0, scale)
    b = rng.uniform(0, scale)
    return Triple(a, b, rng.uniform(-b, b))


def random_triples(n, seed=0, scale=2.0):
    rng = np.random.default_rng(seed)
    return [random_triple(rng, scale) for _ in range(n)]


@st.composite
def triples(draw, scale=2.0):
    a = draw(st.floats(0, scale))
    b = draw(st.floats(0, scale))
    u = draw(st.floats(-1, 1))
    return Triple(a, b, u * b)


points = st.lists(st.floats(-1, 1), min_size=3, max_size=3).map(np.array)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
