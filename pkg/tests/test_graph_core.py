import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import K3, P4
from linearwidth.graph_core import (
    DuplicateEdgeError,
    Graph,
    GraphFormatError,
    MalformedLineError,
    SelfLoopError,
    TooManyVerticesError,
    components,
    format_graph,
    mask_of,
    parse_graph,
    vertices_of,
)


def test_parse_triangle():
    g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert (g.n, g.m) == (3, 3)
    assert g.edges == ((0, 1), (1, 2), (0, 2))
    assert g.degree == (2, 2, 2)
    assert g.adjacency == ((0, 2), (0, 1), (1, 2))


def test_parse_k2():
    g = parse_graph("p 2 1\ne 1 2")
    assert (g.n, g.edges) == (2, ((0, 1),))


def test_relabels_by_first_appearance():
    g = parse_graph("c comment\np 4 2\ne 3 1\ne 1 4\n")
    assert g.edges == ((0, 1), (1, 2))
    assert g.labels == (3, 1, 4, 2)


def test_dimacs_style_header_accepted():
    assert parse_graph("p edge 2 1\ne 1 2").m == 1


@pytest.mark.parametrize("text, error", [
    ("p 2 2\ne 1 2\ne 1 2", DuplicateEdgeError),
    ("p 2 2\ne 1 2\ne 2 1", DuplicateEdgeError),
    ("p 2 1\ne 1 1", SelfLoopError),
    ("p 2 1\ne 1 x", MalformedLineError),
    ("p 2 1\ne 1 3", MalformedLineError),
    ("e 1 2\np 2 1", MalformedLineError),
    ("p 2 1\nq 1 2", MalformedLineError),
    ("p 2 1\ne 1 2 3", MalformedLineError),
    ("p 65 0", TooManyVerticesError),
    ("p 3 2\ne 1 2", GraphFormatError),
    ("", GraphFormatError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_graph(text)


def test_errors_are_distinct_and_share_a_base():
    kinds = {DuplicateEdgeError, SelfLoopError, MalformedLineError, TooManyVerticesError}
    assert len(kinds) == 4
    assert all(issubclass(k, GraphFormatError) for k in kinds)


def test_constructor_checks_simplicity():
    with pytest.raises(SelfLoopError):
        Graph(2, ((1, 1),))
    with pytest.raises(DuplicateEdgeError):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 2),))


def test_vertices_of():
    assert vertices_of(K3, mask_of([0])) == mask_of([0, 1])
    assert vertices_of(K3, 0) == 0
    assert vertices_of(P4, mask_of([0, 2])) == mask_of([0, 1, 2, 3])


def test_components():
    assert [c.graph.n for c in components(K3)] == [3]
    two_k2 = Graph(4, ((0, 1), (2, 3)))
    comps = components(two_k2)
    assert [(c.graph.n, c.graph.m) for c in comps] == [(2, 1), (2, 1)]
    assert comps[1].vertex_map == (2, 3) and comps[1].edge_map == (1,)
    mixed = Graph(4, ((1, 2), (2, 3), (1, 3)))
    assert [(c.graph.n, c.graph.m) for c in components(mixed)] == [(1, 0), (3, 3)]


graphs = st.integers(1, 9).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] < p[1]),
        unique=True, max_size=20,
    ).map(lambda es: Graph(n, tuple(es)))
)


@given(graphs, st.randoms(use_true_random=False))
def test_round_trip_and_relabeling(g, rnd):
    labels = list(range(1, g.n + 1))
    rnd.shuffle(labels)
    text = "p {} {}\n".format(g.n, g.m) + "".join(f"e {labels[u]} {labels[v]}\n" for u, v in g.edges)
    once = parse_graph(text)
    twice = parse_graph(format_graph(once))
    assert once == twice
    assert format_graph(once) == format_graph(twice)
    assert once.labels == twice.labels


@given(graphs, st.data())
def test_vertices_of_monotone(g, data):
    f2 = data.draw(st.integers(0, g.all_edges))
    f1 = f2 & data.draw(st.integers(0, g.all_edges))
    v1, v2 = vertices_of(g, f1), vertices_of(g, f2)
    assert v1 & ~v2 == 0
    assert v2 & ~g.all_vertices == 0


@settings(max_examples=60)
@given(graphs)
def test_components_partition(g):
    comps = components(g)
    vs = [v for c in comps for v in c.vertex_map]
    es = [e for c in comps for e in c.edge_map]
    assert sorted(vs) == list(range(g.n))
    assert sorted(es) == list(range(g.m))
    for c in comps:
        seen, todo = {0}, [0]
        while todo:
            x = todo.pop()
            for e in c.graph.adjacency[x]:
                y = sum(c.graph.edges[e]) - x
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        assert len(seen) == c.graph.n
        for local, e in enumerate(c.edge_map):
            u, v = c.graph.edges[local]
            assert {c.vertex_map[u], c.vertex_map[v]} == set(g.edges[e])


def test_invariants_of_random_graph():
    rng = random.Random(5)
    g = Graph(12, tuple((u, v) for u in range(12) for v in range(u + 1, 12) if rng.random() < 0.4))
    for v in range(g.n):
        assert len(g.adjacency[v]) == g.degree[v]
        assert all(v in g.edges[e] for e in g.adjacency[v])
