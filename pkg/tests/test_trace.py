"""Optimal-play traces and the scripted two-cop cycle strategy."""

import pytest

from cheatbot.engine import BODYGUARD, CHEATING, SURROUNDING
from cheatbot.graphcore import cycle, path
from cheatbot.solver import SolverError, best_play_trace, scripted_cycle_strategy, solve


def test_p3_capture_from_the_center():
    tr = best_play_trace(path(3), solve(path(3), 1), ((1,), 0))
    assert tr.outcome == "capture"
    assert len(tr.rounds) <= 2


def test_cycle_strategy_start_needs_no_pushes():
    g = cycle(6)
    res = solve(g, 2)
    strat = scripted_cycle_strategy(6)
    cops = strat.initial()
    for r in res.robber_starts(cops):
        tr = best_play_trace(g, res, (cops, r))
        assert tr.outcome == "capture"
    nopush = solve(g, 2, push_budget=0)
    tr = best_play_trace(g, nopush, (cops, 3))
    assert tr.pushers == 0 and all(not rd.pushed for rd in tr.rounds)


def test_p7_trace_records_one_pusher():
    g = path(7)
    tr = best_play_trace(g, solve(g, 1))
    assert tr.outcome == "capture"
    assert tr.pushers == 1


def test_trace_json_shape():
    tr = best_play_trace(path(4), solve(path(4), 1))
    js = tr.to_json()
    assert set(js) == {"start", "outcome", "rounds", "distinct_pushers"}
    assert js["rounds"][-1]["robber"] is None


def test_surround_trace_ends_surrounded():
    tr = best_play_trace(cycle(5), solve(cycle(5), 2, SURROUNDING))
    assert tr.outcome == "surround"


def test_trace_rejects_robber_wins_and_bodyguard():
    with pytest.raises(SolverError):
        best_play_trace(cycle(5), solve(cycle(5), 1), ((0,), 2))
    with pytest.raises(SolverError):
        best_play_trace(cycle(4), solve(cycle(4), 2, BODYGUARD))


def test_traces_are_deterministic():
    g = path(6)
    res = solve(g, 1)
    assert best_play_trace(g, res).to_json() == best_play_trace(g, res).to_json()


@pytest.mark.parametrize("n", range(3, 13))
def test_pincer_captures_without_pushing(n):
    rep = scripted_cycle_strategy(n).simulate()
    assert rep.captured_always
    assert rep.max_pushes == 0


def test_pincer_round_bounds():
    assert scripted_cycle_strategy(3).simulate().max_rounds <= 2
    assert scripted_cycle_strategy(12).simulate().max_rounds <= 24
