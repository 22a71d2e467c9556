import random

import pytest
from hypothesis import strategies as st

from enumorder import Listing


def brute_uniform(a, b):
    """All-pairs definition: h(i) < h(j) iff g(i) < g(j) for every i, j."""
    if len(a) != len(b):
        return False
    n = len(a)
    return all((a[i] < a[j]) == (b[i] < b[j]) for i in range(n) for j in range(n))


def brute_ranks(values):
    return [sum(1 for w in values if w <= v) for v in values]


def random_listing(rng, length, hi=None):
    hi = hi or max(4 * length, 10)
    return Listing(tuple(rng.sample(range(1, hi + 1), length)))


@pytest.fixture
def rng():
    return random.Random(20261019)


@st.composite
def listings(draw, min_size=0, max_size=12, max_value=60):
    vals = draw(st.lists(st.integers(1, max_value), min_size=min_size,
                         max_size=max_size, unique=True))
    return Listing(tuple(vals))


@st.composite
def same_length_pair(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    a = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n, unique=True))
    b = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n, unique=True))
    return Listing(tuple(a)), Listing(tuple(b))
