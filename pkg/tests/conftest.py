import random

import pytest

from letterkit import disjoint_union, join, path


def random_cograph(rng: random.Random, n: int):
    """Random cograph on n vertices from a random cotree."""
    if n == 1:
        return path(1)
    left = rng.randint(1, n - 1)
    op = join if rng.random() < 0.5 else disjoint_union
    return op(random_cograph(rng, left), random_cograph(rng, n - left))


def random_graph(rng: random.Random, n: int, p: float):
    from letterkit import Graph
    return Graph.from_edges(n, [(u, v) for u in range(n)
                                for v in range(u + 1, n)
                                if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
