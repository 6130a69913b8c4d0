import random

import pytest

from toricgraph import (
    Graph,
    GraphFormatError,
    complete_bipartite_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    graph_to_edgelist,
    graph_to_json,
    incidence_rank,
    induced_subgraph,
    is_bipartite,
    loads_graph,
    path_graph,
    recognize_complete_bipartite,
)

from oracles import random_graph


def test_json_parse_and_round_trip():
    text = '{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}'
    g = loads_graph(text)
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b"), ("b", "c"))
    assert loads_graph(graph_to_json(g)) == g


def test_edgelist_parse():
    text = "# a comment\nu v\n\nv w   # trailing comment\nlonely\n"
    g = loads_graph(text)
    assert g.vertices == ("u", "v", "w", "lonely")
    assert g.edges == (("u", "v"), ("v", "w"))
    assert g.degree("lonely") == 0


def test_edgelist_round_trip():
    g = Graph(("p", "q", "r", "s"), (("p", "q"), ("q", "r")))
    assert loads_graph(graph_to_edgelist(g)) == g


def test_edgelist_rejects_unwritable_labels():
    g = Graph(("a b",), ())
    with pytest.raises(GraphFormatError, match="edge-list format"):
        graph_to_edgelist(g)
    with pytest.raises(GraphFormatError):
        graph_to_edgelist(Graph(("x#1",), ()))


@pytest.mark.parametrize(
    "text,needle",
    [
        ('{"vertices": ["a"], "edges"', "invalid JSON"),
        ('{"vertices": ["a"]}', "missing 'edges'"),
        ('{"vertices": "a", "edges": []}', "expected a list"),
        ('{"vertices": ["a", "a"], "edges": []}', "duplicate vertex"),
        ('{"vertices": ["a", "b"], "edges": [["a", "b", "c"]]}', "edges[0]"),
        ('{"vertices": ["a", "b"], "edges": [["a", 3]]}', "edges[0][1]"),
        ('{"vertices": ["a"], "edges": [["a", "a"]]}', "loop"),
        ('{"vertices": ["a"], "edges": [["a", "z"]]}', "unknown vertex"),
        ("a b\nb a\n", "line 2: duplicate edge"),
        ("a a\n", "line 1: loop"),
        ("a b c\n", "line 1"),
        ("a\na\n", "declared twice"),
    ],
)
def test_parse_errors_carry_location(text, needle):
    with pytest.raises(GraphFormatError) as exc:
        loads_graph(text)
    assert needle in str(exc.value)


def test_duplicate_edge_ignores_orientation():
    with pytest.raises(GraphFormatError, match="duplicate edge"):
        Graph(("a", "b"), (("a", "b"), ("b", "a")))


def test_lookups():
    g = cycle_graph(4)
    assert g.neighbors("v1") == ("v2", "v4")
    assert g.degree("v2") == 2
    assert g.has_edge("v4", "v1") and g.has_edge("v1", "v4")
    assert not g.has_edge("v1", "v3")
    assert g.edge_position("v1", "v4") == 3
    with pytest.raises(GraphFormatError):
        g.edge_position("v1", "v3")


def test_incidence_columns():
    g = Graph(("a", "b", "c"), (("a", "c"),))
    assert g.incidence_column(("a", "c")) == (1, 0, 1)
    assert g.incidence_columns() == [(1, 0, 1)]


@pytest.mark.parametrize(
    "g,expected",
    [
        (cycle_graph(3), 3),  # odd cycle: full rank
        (cycle_graph(4), 3),
        (cycle_graph(5), 5),
        (cycle_graph(6), 5),
        (complete_bipartite_graph(2, 3), 4),
        (path_graph(4), 3),
        (Graph(("a",), ()), 0),
    ],
)
def test_incidence_rank(g, expected):
    assert incidence_rank(g) == expected


def test_incidence_rank_counts_bipartite_components():
    # rank = n - (number of bipartite components), component by component
    g = disjoint_union(cycle_graph(4, "a"), cycle_graph(5, "b"), path_graph(2, "c"))
    assert incidence_rank(g) == 11 - 2


def test_components_and_bipartite():
    g = disjoint_union(path_graph(3, "p"), cycle_graph(3, "t"))
    assert connected_components(g) == [("p1", "p2", "p3"), ("t1", "t2", "t3")]
    assert is_bipartite(g) == [True, False]


def test_induced_subgraph_keeps_order():
    g = cycle_graph(5)
    h = induced_subgraph(g, ["v4", "v1", "v2"])
    assert h.vertices == ("v1", "v2", "v4")
    assert h.edges == (("v1", "v2"),)
    with pytest.raises(GraphFormatError, match="unknown vertex"):
        induced_subgraph(g, ["v9"])


def test_recognize_complete_bipartite():
    assert recognize_complete_bipartite(complete_bipartite_graph(2, 3)) == (2, 3)
    assert recognize_complete_bipartite(complete_bipartite_graph(3, 3)) == (3, 3)
    assert recognize_complete_bipartite(path_graph(2)) == (1, 1)
    assert recognize_complete_bipartite(cycle_graph(4)) == (2, 2)
    assert recognize_complete_bipartite(cycle_graph(6)) is None
    assert recognize_complete_bipartite(cycle_graph(3)) is None
    assert recognize_complete_bipartite(Graph(("a",), ())) is None
    with pytest.raises(ValueError, match="connected"):
        recognize_complete_bipartite(disjoint_union(path_graph(2, "a"), path_graph(2, "b")))


def test_star_is_complete_bipartite():
    star = Graph.from_edges([("hub", "s1"), ("hub", "s2"), ("hub", "s3")])
    assert recognize_complete_bipartite(star) == (1, 3)


def test_from_edges_orders_by_first_appearance():
    g = Graph.from_edges([("b", "a"), ("c", "a")])
    assert g.vertices == ("b", "a", "c")


def test_builder_validation():
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        path_graph(0)
    with pytest.raises(ValueError):
        complete_bipartite_graph(0, 2)


def test_random_round_trips():
    rng = random.Random(9172)
    for _ in range(60):
        g = random_graph(rng)
        assert loads_graph(graph_to_json(g)) == g
        assert loads_graph(graph_to_edgelist(g)) == g
