import random

import pytest

from hironaka.engine import initial_state


def random_configuration(rng, n, max_points, coord_bound):
    """Random nonempty point set as a list of coordinate tuples."""
    k = rng.randint(1, max_points)
    return sorted({tuple(rng.randint(0, coord_bound) for _ in range(n)) for _ in range(k)})


def random_state(rng, rules, n=3, max_points=5, coord_bound=10, min_points=2):
    """Random non-terminal game state for the given variant."""
    while True:
        points = random_configuration(rng, n, max_points, coord_bound)
        try:
            state = initial_state(points, rules)
        except ValueError:
            continue
        if len(state.config.points) >= min_points:
            return state


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
