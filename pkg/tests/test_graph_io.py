import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.graph_core import complete_graph, cycle_graph, from_edge_list, path_graph
from src.core.graph_io import (
    parse_edge_list,
    parse_graph6,
    read_graphs,
    to_edge_list,
    to_graph6,
    write_graphs,
)
from src.models.errors import GraphFormatError
from src.models.graph import Graph


def test_parse_k4():
    assert parse_graph6("C~") == complete_graph(4)


def test_single_vertex_encoding():
    assert to_graph6(Graph(1)) == "@"
    assert parse_graph6("@") == Graph(1)


def test_header_is_accepted():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_known_encodings():
    # P_3: bits (0,1)=1, (0,2)=0, (1,2)=1 -> 101000
    assert to_graph6(path_graph(3)) == "Bg"
    assert to_graph6(cycle_graph(5)) == "Dhc"


def test_large_order_header():
    g = path_graph(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize("text", ["", "C", "C~~", "Bh", "C}\x7f", ":Fa@x^", "&C~"])
def test_malformed_graph6(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


def test_edge_list_format():
    g = cycle_graph(4)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "4 4"
    assert parse_edge_list(text) == g


def test_edge_list_errors():
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1\n0 x\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1\n0 1\n1 2\n")


def test_read_graphs_auto_mixes_formats():
    text = "C~\n# commentaire\n3 2\n0 1\n1 2\n@\n"
    graphs = list(read_graphs(text))
    assert graphs == [complete_graph(4), path_graph(3), Graph(1)]


def test_read_graphs_forced_format():
    with pytest.raises(GraphFormatError):
        list(read_graphs("C~\n", "edgelist"))
    with pytest.raises(GraphFormatError):
        list(read_graphs("C~\n", "sparse6"))


def test_write_graphs():
    graphs = [complete_graph(4), from_edge_list(2, [(0, 1)])]
    assert write_graphs(graphs) == "C~\nA_\n"
    assert write_graphs(graphs, "edgelist") == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 1\n0 1\n"


@st.composite
def labelled_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=70))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60))
    return from_edge_list(n, [(u, v) for u, v in pairs if u != v])


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=150, deadline=None)
@given(g=labelled_graphs())
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(_to_networkx(g), header=False).strip().decode("ascii")
    assert to_graph6(g) == expected
    back = nx.from_graph6_bytes(expected.encode("ascii"))
    assert parse_graph6(expected).edges == tuple(sorted(tuple(sorted(e)) for e in back.edges))


@st.composite
def small_labelled_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(g=small_labelled_graphs())
def test_graph6_round_trip_on_small_orders(g):
    code = to_graph6(g)
    assert parse_graph6(code) == g
    assert to_graph6(parse_graph6(code)) == code
