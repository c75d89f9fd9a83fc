"""Move generation and rule checks for the three games."""

from itertools import combinations_with_replacement

from cheatbot.engine import (
    BODYGUARD,
    CHEATING,
    SURROUNDING,
    CopTurnState,
    PushState,
    Ruleset,
    RobberTurnState,
    canonicalize,
    cop_moves,
    initial_states,
    robber_responses,
    surround_holds,
)
from cheatbot.graphcore import complete, cycle, path, star


def test_one_cop_on_p3_center():
    evs = list(cop_moves(CopTurnState((1,), 0), path(3)))
    assert len(evs) == 3


def test_colocated_cops_move_as_multiset():
    evs = list(cop_moves(CopTurnState((0, 0), 2), cycle(4)))
    assert len(evs) == 6


def test_stepping_onto_robber_is_a_push():
    evs = [e for e in cop_moves(CopTurnState((1,), 0), path(3)) if e.cops == (0,)]
    assert len(evs) == 1
    assert evs[0].pushers == (0,)
    assert evs[0].forbidden == frozenset({1})


def test_cheating_robber_cannot_use_the_cop_edge():
    g = cycle(5)
    # cop moved 1 -> 0, a second cop sits on 3
    s = RobberTurnState((0, 3), 0, frozenset({1}))
    assert robber_responses(s, g, CHEATING) == frozenset({4})
    # the same position in the surrounding game ignores the edge
    assert robber_responses(s, g, SURROUNDING) == frozenset({1, 4})


def test_robber_may_pass_when_not_pushed():
    s = RobberTurnState((2,), 0, frozenset())
    assert robber_responses(s, path(3), CHEATING) == frozenset({0, 1})


def test_bodyguard_colocation_option():
    s = RobberTurnState((1,), 0, frozenset())
    assert 1 in robber_responses(s, path(3), BODYGUARD)
    no_share = Ruleset(BODYGUARD.game, colocation=False)
    assert 1 not in robber_responses(s, path(3), no_share)


def test_surround_holds():
    assert surround_holds((1, 4), 0, cycle(5))
    assert not surround_holds((1, 2), 0, star(3))
    assert surround_holds((1, 2, 3), 0, complete(4))


def test_canonicalize():
    assert canonicalize(CopTurnState((3, 1, 2), 0)).cops == (1, 2, 3)
    s = canonicalize(PushState(((3, True), (1, False)), 0))
    assert s.cops == ((1, False), (3, True))


def test_initial_states():
    p2 = list(initial_states(path(2), 1, CHEATING))
    assert len(p2) == 2 and all(len(rs) == 1 for _, rs in p2)
    assert len(list(initial_states(cycle(3), 2, CHEATING))) == 6
    k3 = dict(initial_states(complete(3), 3, CHEATING))
    assert k3[(0, 1, 2)] == []


def test_events_cover_every_canonical_successor():
    g = cycle(5)
    for cops in combinations_with_replacement(range(5), 2):
        got = {e.cops for e in cop_moves(CopTurnState(cops, 0), g)}
        want = {
            tuple(sorted((a, b)))
            for a in g.closed_neighbors(cops[0])
            for b in g.closed_neighbors(cops[1])
        }
        assert got == want
