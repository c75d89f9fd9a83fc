"""Optimal-play traces from a solved position."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

from ..engine import Game, MoveEvent, PushState, cop_moves, robber_responses, surround_holds, vertex_of
from ..engine import RobberTurnState
from .solve import SolveResult, SolverError


@dataclass(frozen=True)
class TraceRound:
    cops_before: tuple
    robber_before: int
    move: MoveEvent
    cops_after: tuple
    pushed: bool
    new_pushers: int
    robber_after: Optional[int]


@dataclass
class Trace:
    start_cops: tuple
    start_robber: int
    rounds: list[TraceRound] = field(default_factory=list)
    outcome: str = "capture"
    pushers: int = 0

    def to_json(self) -> dict:
        return {
            "start": {"cops": [vertex_of(c) for c in self.start_cops], "robber": self.start_robber},
            "outcome": self.outcome,
            "rounds": [
                {
                    "cops": [vertex_of(c) for c in rd.cops_after],
                    "traversed": [list(e) for e in rd.move.traversed],
                    "pushers": len(rd.move.pushers) if rd.pushed else 0,
                    "new_pushers": rd.new_pushers,
                    "robber": rd.robber_after,
                }
                for rd in self.rounds
            ],
            "distinct_pushers": self.pushers,
        }


def _flag_pushers(items, r):
    return tuple(sorted((v, f or v == r) for v, f in items))


def _flagged(items) -> int:
    return sum(1 for _, f in items if f)


class _Player:
    """Cops follow the solved policy; the robber maximizes (rounds, distinct pushers)."""

    def __init__(self, g, result: SolveResult):
        self.g = g
        self.res = result
        self.memo: dict = {}
        self.surround = result.rules.game is Game.SURROUNDING

    def cop_move(self, items, r) -> MoveEvent:
        res = self.res
        if res.shift:
            ev = res.policy(items, r)
            if ev is None:
                raise SolverError(f"no winning cop move at {items}, robber {r}")
            return ev
        verts = tuple(sorted(v for v, _ in items))
        pe = res.policy(verts, r)
        if pe is None:
            raise SolverError(f"no winning cop move at {verts}, robber {r}")
        target = tuple(sorted(vertex_of(c) for c in pe.cops))
        # among labelings of the policy move, prefer the one that flags fewest cops
        best = None
        for ev in cop_moves(PushState(items, r), self.g):
            if tuple(v for v, _ in ev.cops) != target or ev.forbidden != pe.forbidden:
                continue
            cost = _flagged(_flag_pushers(ev.cops, r))
            if best is None or cost < best[0]:
                best = (cost, ev)
        return best[1]

    def options(self, ev, r):
        cops = ev.cops
        if self.surround and surround_holds(cops, r, self.g):
            return []
        rt = RobberTurnState(tuple(v for v, _ in cops), r, ev.forbidden)
        return sorted(robber_responses(rt, self.g, self.res.rules))

    def value(self, items, r):
        """(rounds, distinct pushers at the end) under best robber play."""
        key = (items, r)
        if key in self.memo:
            return self.memo[key][0]
        ev = self.cop_move(items, r)
        opts = self.options(ev, r)
        if not opts:
            val, choice, after = (1, _flagged(ev.cops)), None, ev.cops
        else:
            after = _flag_pushers(ev.cops, r) if ev.pushers else ev.cops
            best = None
            for w in opts:
                rounds, p = self.value(after, w)
                cand = (rounds + 1, p)
                if best is None or cand > best[0]:
                    best = (cand, w)
            val, choice = best
        self.memo[key] = (val, ev, after, choice)
        return val


def best_play_trace(g, result: SolveResult, start=None) -> Trace:
    """Play the solved policy against a best-responding robber until capture.

    ``start`` is ``(cops, robber)``; by default the certificate placement
    with the robber's best starting vertex.
    """
    if result.rules.game is Game.BODYGUARD:
        raise SolverError("traces are defined for the cheating robot and surrounding games")
    player = _Player(g, result)
    if start is None:
        cops = result.placement
        if cops is None:
            raise SolverError("no cop-winning placement to trace from")
        starts = result.robber_starts(cops)
        if not starts:
            return Trace(tuple(cops), -1, [], "no_robber_placement", 0)
    else:
        cops, r0 = start
        starts = [r0]
    cops = tuple(sorted(cops))
    for r in starts:
        if not result.valid(cops, r) or not result.cop_wins(cops, r):
            raise SolverError(f"start (cops={cops}, robber={r}) is outside the cop-winning region")
    items = cops if result.shift else tuple((v, False) for v in cops)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        r = max(starts, key=lambda v: (player.value(items, v), -v))
        trace = Trace(cops, r)
        while True:
            player.value(items, r)
            _, ev, after, choice = player.memo[(items, r)]
            pushed = bool(ev.pushers) and choice is not None
            trace.rounds.append(TraceRound(items, r, ev, after, pushed,
                                           _flagged(after) - _flagged(items), choice))
            if choice is None:
                trace.outcome = "surround" if player.surround and surround_holds(ev.cops, r, g) else "capture"
                break
            items, r = after, choice
        trace.pushers = _flagged(after)
    finally:
        sys.setrecursionlimit(old)
    return trace
