import itertools

import pytest

from src.core.graph_core import (
    GraphBuilder,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    path_graph,
    relabel,
    star_graph,
)


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="exécute les tests longs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="test long: utiliser --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def brute_force_isomorphic(g, h):
    """Oracle: essaie toutes les permutations"""
    if g.n != h.n or g.m != h.m:
        return False
    return any(relabel(g, list(p)).edges == h.edges for p in itertools.permutations(range(g.n)))


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def claw():
    """K_{1,3}, centre 0"""
    return star_graph(3)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def two_triangles():
    return disjoint_union(cycle_graph(3), cycle_graph(3))


@pytest.fixture
def triangle_chain():
    """Trois triangles accrochés aux sommets d'un chemin 0-1-2"""
    builder = GraphBuilder(3)
    builder.add_edge(0, 1)
    builder.add_edge(1, 2)
    for v in range(3):
        builder.add_cycle_at(v, 3)
    return builder.build()


@pytest.fixture
def k4_with_tail():
    """K_4 et un chemin de longueur 3 accroché au sommet 0"""
    return from_edge_list(7, list(complete_graph(4).edges) + [(0, 4), (4, 5), (5, 6)])


@pytest.fixture
def iso_oracle():
    return brute_force_isomorphic
