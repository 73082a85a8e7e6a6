import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import family_corpus, floyd_warshall, random_connected_graph
from metdim import (
    EdgeItem,
    VertexItem,
    all_pairs_distances,
    build_graph,
    coordinate_vector,
    flower_snark,
    item_distance,
    structural_report,
    wheel,
)
from metdim.errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateLandmark,
    GraphError,
    IndexOutOfRange,
    MalformedGraphFile,
    SelfLoop,
)
from metdim.graph import bridges, is_path, item_matrix
from metdim.io import format_edge_list, parse_edge_list, write_edge_list


@st.composite
def connected_graphs(draw, max_n=30):
    n = draw(st.integers(2, max_n))
    p = draw(st.sampled_from([0.0, 0.1, 0.3, 0.6]))
    seed = draw(st.integers(0, 10**6))
    return random_connected_graph(n, p, seed)


# build_graph ----------------------------------------------------------------

def test_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_edges_are_canonicalised():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "n, edges, exc, needle",
    [
        (4, [(0, 1), (2, 3)], Disconnected, "vertex 2"),
        (3, [(0, 1), (1, 1), (1, 2)], SelfLoop, "vertex 1"),
        (3, [(0, 1), (1, 0), (1, 2)], DuplicateEdge, "(0, 1)"),
        (3, [(0, 1), (1, 3)], IndexOutOfRange, "3"),
        (1, [], GraphError, "at least 2"),
    ],
)
def test_build_graph_rejects(n, edges, exc, needle):
    with pytest.raises(exc, match=needle.replace("(", r"\(").replace(")", r"\)")):
        build_graph(n, edges)


def test_flower_snark_5_size():
    g, _ = flower_snark(5)
    assert (g.n, g.m) == (20, 30)


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_graph_invariants(g):
    assert sum(len(a) for a in g.adjacency) == 2 * g.m
    for v, nbrs in enumerate(g.adjacency):
        assert v not in nbrs
        assert list(nbrs) == sorted(set(nbrs))
        for w in nbrs:
            assert v in g.adjacency[w]


# distances ------------------------------------------------------------------

def test_path_distance():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert all_pairs_distances(g)(0, 2) == 2


def test_wheel_hub_shortcut():
    g, _ = wheel(8)
    dm = all_pairs_distances(g)
    assert dm(g.index_of("v_1"), g.index_of("v_4")) == 2


def test_flower_distance_from_table():
    g, lab = flower_snark(11)
    dm = all_pairs_distances(g)
    assert dm(lab.index("c", 0), lab.index("c", 7)) == 6


@given(connected_graphs())
@settings(max_examples=80, deadline=None)
def test_distances_match_floyd_warshall(g):
    dm = all_pairs_distances(g)
    assert np.array_equal(dm.dist, floyd_warshall(g))


@given(connected_graphs(max_n=20))
@settings(max_examples=40, deadline=None)
def test_distance_matrix_invariants(g):
    d = all_pairs_distances(g).dist
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    for u in range(g.n):
        for v in range(g.n):
            assert (d[u, v] == 1) == g.has_edge(u, v)
    # triangle inequality for every (u, v, w)
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()


def test_distance_matrix_is_read_only():
    dm = all_pairs_distances(build_graph(2, [(0, 1)]))
    with pytest.raises(ValueError):
        dm.dist[0, 1] = 5


# items and coordinates --------------------------------------------------------

def test_item_distance_incident_landmark():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert item_distance(all_pairs_distances(g), EdgeItem(0, 1), 0) == 0


def test_item_distance_wheel_spoke():
    g, _ = wheel(8)
    dm = all_pairs_distances(g)
    assert item_distance(dm, EdgeItem(0, 3), 7) == 1


def test_item_distance_twist_edge():
    g, lab = flower_snark(11)
    dm = all_pairs_distances(g)
    edge = EdgeItem(lab.index("c", 0), lab.index("d", 10))
    assert g.has_edge(*edge.endpoints)
    assert item_distance(dm, edge, lab.index("b", 0)) == 2


def test_edge_item_orders_endpoints():
    assert EdgeItem(5, 2).endpoints == (2, 5)


def test_coordinate_vector_identity():
    g, _ = wheel(5)
    dm = all_pairs_distances(g)
    for v in range(g.n):
        assert coordinate_vector(dm, VertexItem(v), [v]) == (0,)


@pytest.mark.parametrize("label, expected", [("c_0", (2, 1, 6, 5)), ("a_3", (4, 3, 5, 1))])
def test_coordinate_vector_table_rows(label, expected):
    g, _ = flower_snark(11)
    dm = all_pairs_distances(g)
    lm = [g.index_of(t) for t in ("b_0", "c_1", "c_7", "d_3")]
    assert coordinate_vector(dm, VertexItem(g.index_of(label)), lm) == expected


def test_coordinate_vector_duplicate_landmark():
    g, _ = wheel(4)
    with pytest.raises(DuplicateLandmark):
        coordinate_vector(all_pairs_distances(g), VertexItem(0), [1, 1])


@pytest.mark.parametrize("g", family_corpus(), ids=lambda g: g.name)
def test_full_vertex_set_zero_pattern(g):
    """One zero per vertex item, two per edge item, all vectors distinct."""
    dm = all_pairs_distances(g)
    rows = item_matrix(g, dm, "mixed")
    zeros = (rows == 0).sum(axis=1)
    assert (zeros[: g.n] == 1).all()
    assert (zeros[g.n:] == 2).all()
    assert len({tuple(r) for r in rows.tolist()}) == g.n + g.m


@given(connected_graphs(max_n=15))
@settings(max_examples=40, deadline=None)
def test_edge_distance_is_an_endpoint_distance(g):
    dm = all_pairs_distances(g)
    for u, v in g.edges:
        for w in range(g.n):
            d = item_distance(dm, EdgeItem(u, v), w)
            assert d in (dm(u, w), dm(v, w))
            assert d == min(dm(u, w), dm(v, w))


def test_item_order_is_canonical():
    g = build_graph(3, [(1, 2), (0, 1)])
    assert g.items() == [VertexItem(0), VertexItem(1), VertexItem(2), EdgeItem(0, 1), EdgeItem(1, 2)]
    assert g.items("edge") == [EdgeItem(0, 1), EdgeItem(1, 2)]


# structure ---------------------------------------------------------------------

def test_structural_report_flower():
    rep = structural_report(flower_snark(7)[0])
    assert (rep.min_degree, rep.max_degree, rep.is_regular, rep.is_bridgeless) == (3, 3, True, True)


def test_structural_report_wheel():
    rep = structural_report(wheel(8)[0])
    assert (rep.min_degree, rep.max_degree, rep.is_regular) == (3, 8, False)


def test_structural_report_path():
    assert structural_report(build_graph(3, [(0, 1), (1, 2)])).is_bridgeless is False


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_bridges_match_networkx(g):
    ref = nx.Graph(list(g.edges))
    assert bridges(g) == sorted(tuple(sorted(e)) for e in nx.bridges(ref))


def test_is_path():
    assert is_path(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_path(build_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_path(wheel(3)[0])


# file formats --------------------------------------------------------------------

@pytest.mark.parametrize("g", family_corpus(max_flower=7), ids=lambda g: g.name)
def test_edge_list_round_trip(g):
    text = format_edge_list(g)
    back = parse_edge_list(text)
    assert back.edges == g.edges
    assert back.labels == g.labels
    assert format_edge_list(back) == text


def test_write_edge_list_stream():
    g, _ = wheel(3)
    buf = io.StringIO()
    write_edge_list(g, buf)
    assert "p 4 6" in buf.getvalue()
    assert "# label 0 v_0" in buf.getvalue()


def test_plain_format_without_header_and_with_comments():
    g = parse_edge_list("# a triangle\n0 1\n1 2  # trailing\n\n2 0\n")
    assert (g.n, g.m) == (3, 3)


def test_dimacs_format():
    g = parse_edge_list("c path\np edge 3 2\ne 1 2\ne 2 3\n", dimacs=True)
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, dimacs",
    [
        ("0 1\n1 x\n", False),
        ("p 3 5\n0 1\n1 2\n", False),
        ("0 1 2\n", False),
        ("e 1 2\n", True),
        ("p edge 3 1\n1 2\n", True),
        ("p 4 2\n0 1\n2 3\n", False),
        ("", False),
    ],
)
def test_malformed_input(text, dimacs):
    with pytest.raises(MalformedGraphFile):
        parse_edge_list(text, dimacs=dimacs)
