from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.core.families import build_H
from src.core.graph_core import complete_graph, cycle_graph, from_edge_list, path_graph, star_graph
from src.core.linearity import (
    check_two_walk_linear,
    is_integral,
    solve_ab,
    solve_ab_from,
    vertex_sum,
    vertex_sums,
)
from src.models.errors import InvalidGraphError, VerdictError
from src.models.graph import Graph
from src.models.verdict import Linear, NotLinear, Regular

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def test_vertex_sum_examples(claw):
    assert vertex_sum(claw, 0) == 3
    assert all(vertex_sum(cycle_graph(5), v) == 4 for v in range(5))
    h1 = build_H(1)
    hub = h1.degrees.index(6)
    assert vertex_sum(h1, hub) == 12


def test_vertex_sums_match_single_sums(p5):
    assert vertex_sums(p5) == (2, 3, 4, 3, 2)


def test_solve_ab_examples():
    assert solve_ab(path_graph(3)) == (Fraction(0), Fraction(2))
    assert solve_ab(path_graph(4)) == (Fraction(1), Fraction(1))
    assert solve_ab(cycle_graph(6)) is None


def test_solve_ab_from_requires_distinct_degrees(p5):
    with pytest.raises(InvalidGraphError):
        solve_ab_from(p5, 1, 2)


def test_check_examples(p5):
    assert check_two_walk_linear(build_H(1)) == Linear(Fraction(1), Fraction(6))
    assert check_two_walk_linear(build_H(7)) == Linear(Fraction(3), Fraction(0))
    assert check_two_walk_linear(p5) == NotLinear(2, Fraction(3), 4)


def test_tiny_graphs_are_regular():
    assert check_two_walk_linear(Graph(1)) == Regular(0)
    assert check_two_walk_linear(path_graph(2)) == Regular(1)
    assert check_two_walk_linear(complete_graph(4)) == Regular(3)
    with pytest.raises(InvalidGraphError):
        check_two_walk_linear(Graph(0))


def test_star_is_linear():
    # feuilles: S = k, centre: S = k, donc a = 0 et b = k
    assert check_two_walk_linear(star_graph(5)) == Linear(Fraction(0), Fraction(5))


def test_is_integral():
    assert is_integral(Linear(Fraction(1), Fraction(6)))
    assert not is_integral(Linear(Fraction(3, 2), Fraction(1)))
    assert is_integral(Linear(Fraction(0), Fraction(3)))
    with pytest.raises(VerdictError):
        is_integral(Regular(2))
    with pytest.raises(VerdictError):
        is_integral(NotLinear(2, Fraction(3), 4))


def test_verdict_rendering():
    assert str(Linear(Fraction(3, 2), Fraction(-1))) == "linear(3/2,-1)"
    assert str(NotLinear(2, Fraction(3), 4)) == "not-linear(v=2,expected=3,actual=4)"
    assert str(Regular(3)) == "regular"
    assert Linear(Fraction(1), Fraction(6)).to_dict() == {"kind": "linear", "a": "1", "b": "6"}
    assert Regular(2).to_dict() == {"kind": "regular", "degree": 2}


@pytest.mark.parametrize("index", [1, 7, 11, 20, 30])
def test_seed_pair_does_not_matter(index):
    g = build_H(index)
    verdict = check_two_walk_linear(g)
    for u, v in combinations(range(g.n), 2):
        if g.degrees[u] != g.degrees[v]:
            assert solve_ab_from(g, u, v) == (verdict.a, verdict.b)


class TestVerdictProperties:
    @PROPERTY_SETTINGS
    @given(g=small_graphs())
    def test_verdict_is_consistent_with_vertex_sums(self, g):
        verdict = check_two_walk_linear(g)
        sums = vertex_sums(g)
        if isinstance(verdict, Regular):
            assert len(set(g.degrees)) == 1
        elif isinstance(verdict, Linear):
            assert all(sums[v] == verdict.a * g.degrees[v] + verdict.b for v in range(g.n))
        else:
            assert sums[verdict.vertex] == verdict.actual
            assert verdict.actual != verdict.expected

    @PROPERTY_SETTINGS
    @given(g=small_graphs())
    def test_vertex_sums_add_up_to_squared_degrees(self, g):
        # chaque arête uv compte d(u) dans S(v) et d(v) dans S(u)
        assert sum(vertex_sums(g)) == sum(d * d for d in g.degrees)
