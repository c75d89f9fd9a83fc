"""The bitset solver against the explicit-state reference solver."""

from itertools import combinations_with_replacement, permutations

import pytest

from cheatbot.engine import BODYGUARD_OPTION_SETS, CHEATING, SURROUNDING, vertex_of
from cheatbot.graphcore import cycle, path, star
from cheatbot.graphcore.corpus import connected_graphs
from cheatbot.solver import solve, solve_reference
from cheatbot.solver.solve import _bit

SMALL = [g for g in connected_graphs(5, min_n=2)]


def _positions(n, k, flagged_budget=None):
    if flagged_budget:
        items = [(v, f) for v in range(n) for f in (False, True)]
    else:
        items = list(range(n))
    for cops in combinations_with_replacement(items, k):
        if flagged_budget and sum(f for _, f in cops) > flagged_budget:
            continue
        occ = {vertex_of(c) for c in cops}
        for r in range(n):
            if r not in occ:
                yield cops, r


def _agree(g, k, rules, pb=None):
    ref = solve_reference(g, k, rules, push_budget=pb)
    res = solve(g, k, rules, push_budget=pb)
    for cops, r in _positions(g.n, k, pb):
        key = (tuple((c, False) for c in cops), r) if pb == 0 else (cops, r)
        assert (key in ref) == res.cop_wins(cops, r), (sorted(g.edges()), k, rules.key, pb, cops, r)
        if key in ref:
            assert ref[key] == res.rank_of(cops, r)


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("rules", [CHEATING, SURROUNDING], ids=lambda r: r.key)
def test_plain_games_match_reference(rules, k):
    for g in SMALL:
        _agree(g, k, rules)


@pytest.mark.parametrize("k", [1, 2])
def test_push_budgets_match_reference(k):
    for g in SMALL:
        for pb in range(k):
            _agree(g, k, CHEATING, pb)


def test_three_cops_match_reference():
    for g in (cycle(5), path(5), star(4)):
        _agree(g, 3, CHEATING)
        _agree(g, 3, SURROUNDING)
        _agree(g, 3, CHEATING, 1)


@pytest.mark.parametrize("rules", BODYGUARD_OPTION_SETS, ids=lambda r: r.key)
@pytest.mark.parametrize("mode", ["nested", "two_phase"])
def test_bodyguard_matches_reference(rules, mode):
    for g in [g for g in SMALL if g.n <= 4] + [cycle(5)]:
        for k in (1, 2):
            ref = solve_reference(g, k, rules, bodyguard_mode=mode)
            res = solve(g, k, rules, bodyguard_mode=mode)
            for cops in combinations_with_replacement(range(g.n), k):
                t = res.index(cops)
                for r in range(g.n):
                    if rules.colocation or r not in cops:
                        assert (("G", cops, r) in ref) == res.cop_wins(cops, r)
                    assert (("P", cops, r) in ref) == _bit(res.robber_win[t], r)


@pytest.mark.parametrize("rules", [CHEATING, SURROUNDING], ids=lambda r: r.key)
def test_symmetry_reduction_is_sound(rules):
    """Labeled cops and multiset cops give the same verdicts."""
    for g in [g for g in SMALL if g.n <= 4] + [cycle(5)]:
        canon = solve_reference(g, 2, rules)
        labeled = solve_reference(g, 2, rules, labeled=True)
        for (cops, r), _ in labeled.items():
            assert (tuple(sorted(cops)), r) in canon
        for (cops, r) in canon:
            for perm in set(permutations(cops)):
                assert (perm, r) in labeled


def test_forbidden_set_history_suffices():
    """Remembering only this turn's cop edges equals remembering the full last move."""
    for g in [g for g in SMALL if g.n <= 4] + [cycle(5), path(5)]:
        for k in (1, 2):
            d = solve_reference(g, k, CHEATING, labeled=True)
            t1 = solve_reference(g, k, CHEATING, labeled=True, history="T1")
            assert set(d) == {key for key in t1 if key[0] != "R"}
