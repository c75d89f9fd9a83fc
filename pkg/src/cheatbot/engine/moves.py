"""Move semantics shared by the three games.

Cop positions are canonical multisets: sorted tuples of vertices, or, in the
push-budget game, sorted tuples of ``(vertex, has_pushed)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Union

from ..graphcore import Graph
from .rules import Game, Ruleset

Item = Union[int, tuple[int, bool]]


def vertex_of(item: Item) -> int:
    return item[0] if isinstance(item, tuple) else item


def occupied(cops: Iterable[Item]) -> frozenset[int]:
    return frozenset(vertex_of(c) for c in cops)


@dataclass(frozen=True)
class CopTurnState:
    cops: tuple[int, ...]
    robber: int


@dataclass(frozen=True)
class RobberTurnState:
    cops: tuple[int, ...]
    robber: int
    forbidden: frozenset[int] = frozenset()


@dataclass(frozen=True)
class PushState:
    cops: tuple[tuple[int, bool], ...]
    robber: int
    phase: str = "cop"
    forbidden: frozenset[int] = frozenset()

    @property
    def pushed_count(self) -> int:
        return sum(1 for _, f in self.cops if f)


@dataclass(frozen=True)
class MoveEvent:
    cops: tuple
    pushers: tuple[int, ...]
    traversed: tuple[tuple[int, int], ...]
    forbidden: frozenset[int]


def canonicalize(state):
    if isinstance(state, CopTurnState):
        return CopTurnState(tuple(sorted(state.cops)), state.robber)
    if isinstance(state, RobberTurnState):
        return RobberTurnState(tuple(sorted(state.cops)), state.robber, frozenset(state.forbidden))
    if isinstance(state, PushState):
        cops = tuple(sorted((int(v), bool(f)) for v, f in state.cops))
        return PushState(cops, state.robber, state.phase, frozenset(state.forbidden))
    if isinstance(state, tuple):
        return tuple(sorted(state))
    raise TypeError(f"cannot canonicalize {type(state).__name__}")


def _with_vertex(item: Item, v: int) -> Item:
    return (v, item[1]) if isinstance(item, tuple) else v


def labeled_moves(cops: tuple, g: Graph) -> Iterator[tuple]:
    """Every labeled collective move: one closed-neighbour destination per cop."""
    options = [g.closed_neighbors(vertex_of(c)) for c in cops]
    yield from product(*options)


def cop_moves(state, g: Graph) -> Iterator[MoveEvent]:
    """Collective cop moves from a cop-turn state, deduplicated.

    Co-located identical cops are moved as a group (multiset of
    destinations), and events with the same canonical successor, robber
    restriction ``forbidden`` and pusher count are emitted once.
    """
    cops = tuple(state.cops)
    r = state.robber
    groups: list[tuple[Item, int]] = []
    for c in cops:
        if groups and groups[-1][0] == c:
            groups[-1] = (c, groups[-1][1] + 1)
        else:
            groups.append((c, 1))
    per_group = [
        list(combinations_with_replacement(g.closed_neighbors(vertex_of(item)), mult)) for item, mult in groups
    ]
    seen = set()
    for choice in product(*per_group):
        new = []
        trav = []
        for (item, _), dests in zip(groups, choice):
            src = vertex_of(item)
            for d in dests:
                new.append(_with_vertex(item, d))
                if d != src:
                    trav.append((src, d))
        new_t = tuple(sorted(new))
        forbidden = frozenset(s for s, d in trav if d == r)
        pushers = tuple(i for i, c in enumerate(new_t) if vertex_of(c) == r)
        key = (new_t, forbidden, len(pushers))
        if key in seen:
            continue
        seen.add(key)
        yield MoveEvent(new_t, pushers, tuple(sorted(trav)), forbidden)


def after_move(state, event: MoveEvent):
    """Robber-turn position reached by playing ``event`` from ``state``."""
    if isinstance(state, PushState):
        return PushState(event.cops, state.robber, "robber", event.forbidden)
    return RobberTurnState(event.cops, state.robber, event.forbidden)


def robber_responses(s, g: Graph, rules: Ruleset) -> frozenset[int]:
    """Legal, non-losing destinations for the evader.

    Occupancy and edge-traversal legality only; being surrounded is judged by
    :func:`surround_holds` / the solver.
    """
    occ = occupied(s.cops)
    r = s.robber
    closed = g.closed_neighbors(r)
    if rules.game is Game.CHEATING_ROBOT:
        return frozenset(w for w in closed if w not in occ and (w == r or w not in s.forbidden))
    if rules.game is Game.SURROUNDING:
        return frozenset(w for w in closed if w not in occ)
    if rules.colocation:
        return frozenset(closed)
    return frozenset(w for w in closed if w not in occ)


def surround_holds(cops: Iterable[Item], v: int, g: Graph) -> bool:
    occ = occupied(cops)
    return all(w in occ for w in g.neighbors(v))


def cop_placements(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations_with_replacement(range(n), k)


def robber_placements(g: Graph, cops: tuple, rules: Ruleset) -> list[int]:
    if rules.game is Game.BODYGUARD and rules.colocation:
        return list(g.vertices())
    occ = occupied(cops)
    return [v for v in g.vertices() if v not in occ]


def initial_states(g: Graph, k: int, rules: Ruleset) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    """Each canonical cop placement with the evader's legal placements.

    An empty robber list means every vertex is occupied; solvers treat that
    placement as an immediate cop win.
    """
    if k < 1:
        raise ValueError("need at least one cop")
    for cops in cop_placements(g.n, k):
        yield cops, robber_placements(g, cops, rules)
