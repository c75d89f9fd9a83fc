"""Property checks on random small graphs."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cheatbot.engine import CHEATING, SURROUNDING
from cheatbot.graphcore import Graph, degeneracy, double_subdivision, is_bipartite, is_connected
from cheatbot.graphcore import parse_edgelist, product, serialize_edgelist
from cheatbot.psi import check_ccr_le_k
from cheatbot.solver import parameter_report, solve

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def connected(draw, min_n=2, max_n=7):
    g = draw(graphs(min_n, max_n))
    # join components along a path so every draw is usable
    edges = set(g.edges())
    for v in range(1, g.n):
        if draw(st.booleans()) or not is_connected(Graph.from_edges(g.n, edges)):
            edges.add((v - 1, v))
    return Graph.from_edges(g.n, edges)


@SETTINGS
@given(graphs(max_n=12))
def test_double_subdivision_structure(g):
    d = double_subdivision(g)
    assert d.n == g.n + 2 * g.m and d.m == 4 * g.m
    assert is_bipartite(d)
    assert all(sum(1 for w in d.neighbors(x) if w < g.n) == 2 for x in range(g.n, d.n))


@SETTINGS
@given(graphs(max_n=10))
def test_edgelist_round_trip(g):
    assert parse_edgelist(serialize_edgelist(g)).content_hash() == g.content_hash()


@SETTINGS
@given(graphs(max_n=10))
def test_degeneracy_order_is_a_peeling(g):
    k, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    pos = {v: i for i, v in enumerate(order)}
    assert all(sum(1 for w in g.neighbors(v) if pos[w] > pos[v]) <= k for v in range(g.n))


@SETTINGS
@given(graphs(max_n=4), graphs(max_n=4), st.sampled_from(["cartesian", "strong", "lexicographic"]))
def test_product_sizes(g, h, kind):
    p = product(g, h, kind)
    assert p.n == g.n * h.n
    if kind == "cartesian":
        assert p.m == g.n * h.m + h.n * g.m
    if kind == "strong":
        assert p.m == g.n * h.m + h.n * g.m + 2 * g.m * h.m
    if kind == "lexicographic":
        assert p.m == g.m * h.n * h.n + g.n * h.m


@SETTINGS
@given(connected(max_n=7))
def test_parameter_chain(g):
    rep = parameter_report(g, ("c_cr", "sigma", "push_cr"))
    assert rep.chain_holds()


@SETTINGS
@given(connected(max_n=6), st.integers(1, 2))
def test_psi_agrees_with_solver(g, k):
    assert check_ccr_le_k(g, k).cop_win == solve(g, k).cop_win


@SETTINGS
@given(connected(max_n=6), st.integers(1, 2))
def test_surrounding_harder_than_capture(g, k):
    # any surrounding win is also a cheating-robot win
    if solve(g, k, SURROUNDING).cop_win:
        assert solve(g, k, CHEATING).cop_win
