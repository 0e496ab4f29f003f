import random
from fractions import Fraction

import pytest

from coarsegeom import (
    LabeledMetricGraph,
    SetFamily,
    build_gamma0,
    build_gamma1,
)


def cycle_graph(n, length=1):
    return LabeledMetricGraph(
        range(n), [(i, i, (i + 1) % n, length) for i in range(n)]
    )


def path_graph(n, lengths=None):
    if lengths is None:
        lengths = [1] * (n - 1)
    return LabeledMetricGraph(
        range(n), [(i, i, i + 1, lengths[i]) for i in range(n - 1)]
    )


def random_tree(seed, n, rational=True):
    """Random rooted tree on vertex ids 0..n-1, optionally with rational
    edge lengths drawn from {1/2, 1, 3/2, 2}."""
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        parent = rng.randrange(i)
        ln = Fraction(rng.randrange(1, 5), 2) if rational else 1
        edges.append((i - 1, parent, i, ln))
    return LabeledMetricGraph(range(n), edges)


def random_graph(seed, n, extra=0, rational=False):
    """Connected random graph: a spanning tree plus extra edges, which may
    be parallel to existing ones."""
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        parent = rng.randrange(i)
        ln = Fraction(rng.randrange(1, 5), 2) if rational else 1
        edges.append((len(edges), parent, i, ln))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        ln = Fraction(rng.randrange(1, 5), 2) if rational else 1
        edges.append((len(edges), u, v, ln))
    return LabeledMetricGraph(range(n), edges)


@pytest.fixture(scope="session")
def fam2():
    return SetFamily.of_lists([["a", "b"], ["c"]])


@pytest.fixture(scope="session")
def fam3():
    return SetFamily.of_lists([["a", "b"], ["c"], ["d", "e", "f"]])


@pytest.fixture(scope="session")
def g0_d2(fam2):
    return build_gamma0(fam2, 2)


@pytest.fixture(scope="session")
def g0_d3(fam2):
    return build_gamma0(fam2, 3)


@pytest.fixture(scope="session")
def g1_d3(fam2):
    return build_gamma1(fam2, 3)


@pytest.fixture(scope="session")
def g0_20(fam2):
    return build_gamma0(fam2, 20)


@pytest.fixture(scope="session")
def g0_10(fam2):
    return build_gamma0(fam2, 10)


@pytest.fixture(scope="session")
def g0_8(fam2):
    return build_gamma0(fam2, 8)


@pytest.fixture(scope="session")
def pipe2(fam2):
    """The 2-set family at pipeline depth, shared across choice tests."""
    return build_gamma0(fam2, 1000), build_gamma1(fam2, 1000)


@pytest.fixture(scope="session")
def pipe3(fam3):
    """The 3-set family at pipeline depth, for the end-to-end runs."""
    return build_gamma0(fam3, 1000), build_gamma1(fam3, 1000)
