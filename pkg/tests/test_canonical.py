import random

import networkx as nx

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.core.canonical import canonical_form, canonical_graph, canonical_labeling, is_isomorphic, refine
from src.core.families import build_H
from src.core.graph_core import complete_graph, cycle_graph, from_edge_list, path_graph, relabel, star_graph
from src.core.graph_io import parse_graph6

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


@st.composite
def small_graphs(draw, max_order=6):
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def relabelled_pairs(draw):
    g = draw(small_graphs(max_order=7))
    permutation = draw(st.permutations(list(range(g.n))))
    return g, relabel(g, permutation)


def test_refine_separates_degrees():
    colours = refine(star_graph(3), [0, 0, 0, 0])
    assert colours[1] == colours[2] == colours[3]
    assert colours[0] != colours[1]


def test_path_form_is_relabel_invariant():
    p4 = path_graph(4)
    assert canonical_form(p4) == canonical_form(relabel(p4, [2, 0, 3, 1]))


def test_same_degree_sequence_distinguished(two_triangles):
    assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)


def test_k4_form_stable_under_relabeling():
    rng = random.Random(7)
    reference = canonical_form(complete_graph(4))
    for _ in range(100):
        permutation = list(range(4))
        rng.shuffle(permutation)
        assert canonical_form(relabel(complete_graph(4), permutation)) == reference


def test_canonical_graph_decodes_form():
    g = build_H(7)
    assert parse_graph6(canonical_form(g).decode("ascii")) == canonical_graph(g)
    assert sorted(canonical_labeling(g)) == list(range(g.n))


def test_is_isomorphic_examples(claw):
    c5 = cycle_graph(5)
    assert is_isomorphic(c5, relabel(c5, [3, 1, 4, 0, 2]))
    assert not is_isomorphic(claw, path_graph(4))
    assert not is_isomorphic(path_graph(3), path_graph(4))


def test_twin_rich_graph():
    # K4 avec trois pendants par sommet: l'élagage des jumeaux garde la recherche courte
    g = complete_graph(4)
    edges = list(g.edges)
    n = 4
    for v in range(4):
        for _ in range(3):
            edges.append((v, n))
            n += 1
    big = from_edge_list(n, edges)
    shuffled = relabel(big, list(reversed(range(n))))
    assert canonical_form(big) == canonical_form(shuffled)


class TestCanonicalFormProperties:
    @PROPERTY_SETTINGS
    @given(pair=relabelled_pairs())
    def test_form_is_invariant_under_relabeling(self, pair):
        g, h = pair
        assert canonical_form(g) == canonical_form(h)

    @PROPERTY_SETTINGS
    @given(g=small_graphs(), h=small_graphs())
    def test_form_agrees_with_permutation_oracle(self, g, h, iso_oracle):
        assert (canonical_form(g) == canonical_form(h)) == iso_oracle(g, h)
        assert is_isomorphic(g, h) == iso_oracle(g, h)

    @PROPERTY_SETTINGS
    @given(g=small_graphs(max_order=7), h=small_graphs(max_order=7))
    def test_isomorphism_agrees_with_networkx(self, g, h):
        left, right = nx.Graph(), nx.Graph()
        left.add_nodes_from(range(g.n))
        left.add_edges_from(g.edges)
        right.add_nodes_from(range(h.n))
        right.add_edges_from(h.edges)
        assert is_isomorphic(g, h) == nx.is_isomorphic(left, right)
