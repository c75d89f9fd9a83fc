"""Explicit-state reference solver.

Slow, direct transcription of the game rules over an explicit game graph.
It exists to cross-check the bitset kernels on small graphs, and it can
switch off the two state reductions the kernels rely on:

* ``labeled=True`` keeps cop tuples in label order instead of sorting them;
* ``history="T1"`` stores the full previous cop tuple in robber-turn nodes
  and applies the edge-traversal rule directly, instead of the compressed
  forbidden set ``D``.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from typing import Optional

from ..engine import (
    CopTurnState,
    Game,
    PushState,
    RobberTurnState,
    Ruleset,
    cop_moves,
    occupied,
    robber_responses,
    surround_holds,
    vertex_of,
)
from ..graphcore import Graph

class ExplicitGame:
    """Two-player game graph: ``owner[v]`` is 'cop' or 'robber'."""

    def __init__(self):
        self.succ: dict = {}
        self.owner: dict = {}

    def add(self, node, owner, succ):
        self.owner[node] = owner
        self.succ[node] = succ

    def attractor(self, target: set, player: str) -> dict:
        """Nodes from which ``player`` forces reaching ``target``.

        Values count ``player`` moves along optimal play (layered, so the
        minimum for ``player`` and the maximum for the opponent).
        """
        dist = {v: 0 for v in target}
        layer = 0
        while True:
            layer += 1
            mine = [
                v for v, ss in self.succ.items()
                if v not in dist and self.owner[v] == player and any(w in dist for w in ss)
            ]
            for v in mine:
                dist[v] = layer
            changed = bool(mine)
            while True:
                theirs = [
                    v for v, ss in self.succ.items()
                    if v not in dist and self.owner[v] != player and ss and all(w in dist for w in ss)
                ]
                for v in theirs:
                    dist[v] = max(dist[w] for w in self.succ[v])
                if not theirs:
                    break
                changed = True
            if not changed:
                return dist


def _cop_tuples(n, k, labeled):
    if labeled:
        return product(range(n), repeat=k)
    return combinations_with_replacement(range(n), k)


def _labeled_cop_moves(cops, g):
    for dest in product(*(g.closed_neighbors(c) for c in cops)):
        yield dest


def solve_reference(
    g: Graph,
    k: int,
    rules: Ruleset,
    labeled: bool = False,
    history: str = "D",
    push_budget: Optional[int] = None,
    bodyguard_mode: str = "nested",
) -> dict:
    """Return ``{(cops, robber): rank}`` for cop-winning cop-turn positions.

    Cop-turn positions missing from the dict are robber wins.  For the push
    game ``cops`` holds ``(vertex, flag)`` pairs.
    """
    if rules.game is Game.BODYGUARD:
        return _solve_bodyguard(g, k, rules, labeled, bodyguard_mode)
    game = ExplicitGame()
    target = set()
    cheating = rules.game is Game.CHEATING_ROBOT
    if push_budget is not None and not cheating:
        raise ValueError("push budgets only apply to the cheating robot game")
    if history == "T1" and (not labeled or push_budget is not None):
        raise ValueError("full-history reference requires labeled cops and no push budget")

    if push_budget is not None and labeled:
        raise ValueError("push budgets are only supported with canonical cops")

    def cop_nodes():
        if push_budget is not None:
            items = [(v, f) for v in range(g.n) for f in (False, True)]
            for cops in combinations_with_replacement(items, k):
                if sum(f for _, f in cops) > push_budget:
                    continue
                occ = {v for v, _ in cops}
                for r in g.vertices():
                    if r not in occ:
                        yield (cops, r)
            return
        for cops in _cop_tuples(g.n, k, labeled):
            occ = set(cops)
            for r in g.vertices():
                if r not in occ:
                    yield (cops, r)

    for node in cop_nodes():
        cops, r = node
        succ = []
        if history == "T1":
            for dest in _labeled_cop_moves(cops, g):
                rnode = ("R", cops, dest, r)
                succ.append(rnode)
                if rnode in game.owner:
                    continue
                options = []
                if not (rules.game is Game.SURROUNDING and surround_holds(dest, r, g)):
                    for w in g.closed_neighbors(r):
                        if w in dest:
                            continue
                        if cheating and w != r and any(
                            {a, b} == {r, w} for a, b in zip(cops, dest) if a != b
                        ):
                            continue
                        options.append((dest, w))
                game.add(rnode, "robber", options)
                if not options:
                    target.add(rnode)
            game.add(node, "cop", succ)
            continue
        if push_budget is not None:
            state = PushState(cops, r)
        else:
            state = CopTurnState(cops, r)
        events = (
            _labeled_events(cops, r, g) if labeled else cop_moves(state, g)
        )
        for ev in events:
            new = ev.cops
            rt = RobberTurnState(tuple(vertex_of(c) for c in new), r, ev.forbidden)
            if rules.game is Game.SURROUNDING and surround_holds(new, r, g):
                options = []
            else:
                options = sorted(robber_responses(rt, g, rules))
            if push_budget is not None and ev.pushers and options:
                flagged = tuple(sorted((v, f or v == r) for v, f in new))
                if sum(f for _, f in flagged) > push_budget:
                    continue
                new = flagged
            rnode = ("R", new, r, ev.forbidden)
            succ.append(rnode)
            if rnode in game.owner:
                continue
            game.add(rnode, "robber", [(new, w) for w in options])
            if not options:
                target.add(rnode)
        game.add(node, "cop", succ)
    dist = game.attractor(target, "cop")
    return {v: d for v, d in dist.items() if game.owner[v] == "cop"}


def _labeled_events(cops, r, g):
    from ..engine import MoveEvent

    for dest in _labeled_cop_moves(cops, g):
        forbidden = frozenset(a for a, b in zip(cops, dest) if b == r and a != r)
        pushers = tuple(i for i, b in enumerate(dest) if b == r)
        trav = tuple((a, b) for a, b in zip(cops, dest) if a != b)
        yield MoveEvent(tuple(dest), pushers, trav, forbidden)


def _solve_bodyguard(g: Graph, k: int, rules: Ruleset, labeled: bool, mode: str = "nested") -> dict:
    """Co-Buchi game: guards must eventually always surround after their move.

    Returns ``{("G", cops, r): value}`` for guard-winning guard-turn nodes
    and ``{("P", cops, r): value}`` for guard-winning president-turn nodes
    (values are attractor ranks in ``two_phase`` mode, 0 otherwise).
    """
    game = ExplicitGame()
    surrounded = set()
    for cops in _cop_tuples(g.n, k, labeled):
        occ = set(cops)
        for r in g.vertices():
            post = ("P", cops, r)
            dests = [w for w in g.closed_neighbors(r) if rules.colocation or w not in occ]
            game.add(post, "robber", [("G", cops, w) for w in dests])
            if surround_holds(cops, r, g):
                surrounded.add(post)
            if rules.colocation or r not in occ:
                moves = {tuple(d) if labeled else tuple(sorted(d)) for d in _labeled_cop_moves(cops, g)}
                game.add(("G", cops, r), "cop", [("P", d, r) for d in sorted(moves)])
    # guard-turn nodes with an illegal president position are never entered
    for v, ss in list(game.succ.items()):
        game.succ[v] = [w for w in ss if w in game.owner]
    posts = [v for v in game.owner if v[0] == "P"]

    def cpre(p, z):
        return all(any(x in z for x in game.succ[w]) for w in game.succ[p])

    if mode == "two_phase":
        safe = set(surrounded)
        while True:
            keep = {v for v in safe if cpre(v, safe)}
            if keep == safe:
                break
            safe = keep
        return game.attractor(safe, "cop")
    # exact co-Buchi region: mu X. nu Y. (S and Cpre(Y)) or Cpre(X)
    x: set = set()
    while True:
        y = set(posts)
        while True:
            yn = {p for p in posts if (p in surrounded and cpre(p, y)) or cpre(p, x)}
            if yn == y:
                break
            y = yn
        if y == x:
            break
        x = y
    out = {p: 0 for p in x}
    for v, ss in game.succ.items():
        if v[0] == "G" and any(w in x for w in ss):
            out[v] = 0
    return out
