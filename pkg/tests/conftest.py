import pytest

from arrideals.arrangement import braid
from arrideals.lattice import compute_lattice

import helpers


@pytest.fixture(scope="session")
def corpus():
    return helpers.corpus_arrangements()


@pytest.fixture(scope="session")
def corpus_lattices(corpus):
    return [compute_lattice(arr) for arr in corpus]


@pytest.fixture(scope="session")
def braid_lattices():
    """Small braid lattices, keyed by n."""
    return {n: compute_lattice(braid(n)) for n in range(2, 7)}
