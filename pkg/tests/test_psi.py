"""The psi refinement as an independent decision procedure."""

from itertools import product

import numpy as np
import pytest

from cheatbot.engine import CHEATING, RobberTurnState, robber_responses
from cheatbot.graphcore import cycle, load_fixture, path
from cheatbot.graphcore.corpus import connected_graphs
from cheatbot.psi import check_ccr_le_k, init_psi, refine_to_fixpoint, surroundable_set
from cheatbot.solver import solve


def test_surroundable_sets():
    assert 0 in surroundable_set(path(3), (1,))
    for v in range(4):
        assert surroundable_set(cycle(4), (v,)) == frozenset()


def test_surroundable_pair_on_c4():
    g = cycle(4)
    s = surroundable_set(g, (0, 1))
    # from 0,1 the cops can occupy both neighbours of 2 or of 3 while one steps on
    for r in (2, 3):
        res = solve(g, 2)
        assert (r in s) == (res.rank_of((0, 1), r) == 1)


def test_initial_entry_on_c5():
    pm = init_psi(cycle(5), 1)
    e = pm.entry((0,), (1,))
    assert (2, 3) in e
    assert (2, 1) not in e
    # the robber may start under the arriving cop; he is pushed, and the edge back to 0 is closed
    assert {r1 for r1, _ in e} == {1, 2, 3, 4}
    assert (1, 2) in e and (1, 0) not in e


def test_fixpoint_examples():
    assert refine_to_fixpoint(init_psi(path(4), 1)).has_empty()
    assert not refine_to_fixpoint(init_psi(cycle(6), 1)).has_empty()


def test_refinement_is_idempotent():
    pm = refine_to_fixpoint(init_psi(load_fixture("square_ring"), 2))
    before = pm.psi.copy()
    refine_to_fixpoint(pm)
    assert np.array_equal(before, pm.psi)


def test_refinement_only_removes():
    pm = init_psi(cycle(5), 2)
    start = pm.psi.copy()
    refine_to_fixpoint(pm)
    assert np.all((pm.psi & ~start) == 0)
    assert pm.history == sorted(pm.history, reverse=True)


@pytest.mark.parametrize("g,k,want", [(path(5), 1, True), (cycle(5), 1, False)])
def test_verdicts(g, k, want):
    assert check_ccr_le_k(g, k).cop_win == want


def test_petersen_matches_solver():
    g = load_fixture("petersen")
    assert check_ccr_le_k(g, 3).cop_win == solve(g, 3).cop_win


def test_small_graphs_match_solver():
    for g in connected_graphs(5, min_n=2):
        for k in (1, 2):
            assert check_ccr_le_k(g, k).cop_win == solve(g, k).cop_win


def _robber_relation(g, k):
    """Solver-derived robber winning moves, per labeled cop move."""
    res = solve(g, k)
    out = {}
    for t1 in product(range(g.n), repeat=k):
        for t2 in product(*(g.closed_neighbors(v) for v in t1)):
            pairs = set()
            for r1 in range(g.n):
                if r1 in t1 or res.cop_wins(tuple(sorted(t1)), r1):
                    continue
                forbidden = frozenset(a for a, b in zip(t1, t2) if b == r1 and a != r1)
                rt = RobberTurnState(tuple(sorted(t2)), r1, forbidden)
                for r2 in robber_responses(rt, g, CHEATING):
                    if not res.cop_wins(tuple(sorted(t2)), r2):
                        pairs.add((r1, r2))
            out[(t1, t2)] = pairs
    return out


@pytest.mark.parametrize("g,k", [(cycle(5), 1), (cycle(6), 1), (load_fixture("square_ring"), 2)])
def test_robber_relation_is_contained_in_fixpoint(g, k):
    pm = refine_to_fixpoint(init_psi(g, k))
    for (t1, t2), pairs in _robber_relation(g, k).items():
        assert pairs <= pm.entry(t1, t2)


def test_dump(tmp_path):
    pm = refine_to_fixpoint(init_psi(path(4), 1))
    out = tmp_path / "psi.json"
    pm.dump(out)
    import json

    data = json.loads(out.read_text())
    assert data["empty"] > 0
    assert data["entries"][0]["size"] == 0


def test_psi_rejects_bad_input():
    with pytest.raises(ValueError):
        init_psi(cycle(4), 0)
