"""Graph construction, products, metrics and edge-list I/O."""

import pytest

from cheatbot.graphcore import (
    GraphError,
    GraphFamily,
    ParameterError,
    ParseError,
    complete,
    complete_multipartite,
    cycle,
    degeneracy,
    double_subdivision,
    ds_hypercube,
    ds_icosahedron,
    generate,
    girth,
    hypercube,
    icosahedron,
    is_bipartite,
    is_connected,
    load_fixture,
    metrics,
    parse_edgelist,
    path,
    product,
    serialize_edgelist,
    star,
    to_dot,
)
from cheatbot.graphcore.corpus import connected_graphs, trees


def regular(g, d):
    return all(g.degree(v) == d for v in g.vertices())


def test_cycle_5():
    g = cycle(5)
    assert g.n == 5
    assert sum(g.degree(v) for v in g.vertices()) == 10
    assert regular(g, 2)


def test_icosahedron():
    g = icosahedron()
    assert (g.n, g.m) == (12, 30)
    assert regular(g, 5)


def test_ds_hypercube_3_counts():
    q = hypercube(3)
    assert (q.n, q.m) == (8, 12)
    assert ds_hypercube(3).n == 8 + 2 * 12


@pytest.mark.parametrize("tag,params", [("cycle", (2,)), ("path", (0,)), ("complete", (0,)), ("nope", (3,))])
def test_bad_family_parameters(tag, params):
    with pytest.raises(ParameterError):
        generate(GraphFamily(tag, params))


def test_generate_matches_direct_call():
    assert generate(GraphFamily("cycle", (6,))).content_hash() == cycle(6).content_hash()
    assert generate(GraphFamily("complete_multipartite", (2, 2, 2))).m == 12


def test_strong_c3_c3_is_k9():
    g = product(cycle(3), cycle(3), "strong")
    assert g.n == 9 and regular(g, 8)


def test_lexicographic_p2_p2_is_k4():
    g = product(path(2), path(2), "lexicographic")
    assert g.n == 4 and g.m == 6


def test_cartesian_p2_p2_is_c4():
    g = product(path(2), path(2), "cartesian")
    assert g.n == 4 and regular(g, 2) and is_connected(g)


def test_unknown_product_kind():
    with pytest.raises((GraphError, ValueError)):
        product(path(2), path(2), "tensor")


def test_ds_of_an_edge_is_a_square():
    d = double_subdivision(path(2))
    assert d.n == 4 and regular(d, 2)


def test_ds_triangle():
    d = double_subdivision(cycle(3))
    assert (d.n, d.m) == (9, 12)
    assert all(d.degree(v) == 4 for v in range(3))


def test_ds_icosahedron():
    d = ds_icosahedron()
    assert d.n == 72
    assert all(d.degree(v) == 10 for v in range(12))
    assert is_bipartite(d)


def test_degeneracy():
    assert degeneracy(complete(5))[0] == 4
    for n in range(2, 9):
        for t in trees(n):
            assert degeneracy(t)[0] == 1
    assert degeneracy(ds_hypercube(3))[0] == 2
    k, order = degeneracy(cycle(7))
    assert k == 2 and sorted(order) == list(range(7))


def test_metrics():
    m = metrics(path(7))
    assert m.is_tree and m.girth is None
    h = load_fixture("heawood")
    assert h.min_degree() == 3 and girth(h) == 6
    assert girth(cycle(5)) == 5 and girth(complete(4)) == 3


def test_parse_path():
    g = parse_edgelist("3\n0 1\n1 2")
    assert g.n == 3 and sorted(g.edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text",
    ["2\n0 0", "2\n0 1\n1 0", "2\n1 0\n0 1", "2\n0 5", "x\n", "3\n0 1 2", "3\n0 a"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


def test_reversed_pairs_are_normalized():
    g = parse_edgelist("# comment\n3\n2 1  # trailing\n1 0\n")
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert serialize_edgelist(g) == "3\n0 1\n1 2\n"


def test_parse_error_names_the_line():
    with pytest.raises(ParseError) as exc:
        parse_edgelist("3\n0 1\n1 1\n")
    assert exc.value.line == 3


def test_edgelist_round_trip():
    for g in (cycle(6), star(4), complete_multipartite(2, 3), load_fixture("petersen")):
        text = serialize_edgelist(g)
        assert serialize_edgelist(parse_edgelist(text)) == text
        assert parse_edgelist(text).content_hash() == g.content_hash()


def test_dot_marks_cops_and_robber():
    out = to_dot(path(3), cops={1: 2}, robber=0)
    assert out.startswith("graph G {")
    assert "C2" in out and "\\nR" in out and "0 -- 1" in out


def test_fixtures_load():
    sizes = {"heawood": (14, 21), "petersen": (10, 15), "k23": (5, 6)}
    for name, nm in sizes.items():
        g = load_fixture(name)
        assert (g.n, g.m) == nm
    for name in ("square_ring", "square_ring_chords", "chorded_path", "pendant_square"):
        assert is_connected(load_fixture(name))


def test_corpus_counts():
    counts = {}
    for g in connected_graphs(7):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    assert [len(list(trees(n))) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
