import random

import pytest

from signedhom import SignedGraph, construct_target
from signedhom.graph import NEG, POS


@pytest.fixture(scope="session")
def target48():
    """A certified order-48 P(2) target reused across embedding tests."""
    return construct_target(3, 48, seed=2024, max_attempts=10)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def worked_triangle():
    # 0-1 positive, 0-2 and 1-2 negative
    return SignedGraph(3, [(0, 1, POS), (0, 2, NEG), (1, 2, NEG)])


@pytest.fixture
def unbalanced_triangle():
    return SignedGraph(3, [(0, 1, POS), (0, 2, POS), (1, 2, NEG)])
