"""Retrograde solving of the three games on bitset state tables."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from ..engine import (
    CHEATING,
    CopTurnState,
    Game,
    MoveEvent,
    PushState,
    RobberTurnState,
    Ruleset,
    cop_moves,
    robber_responses,
    surround_holds,
    vertex_of,
)
from ..graphcore import Graph, is_connected
from . import kernels as K

DEFAULT_BUDGET = 200_000_000


class SolverError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, budget: int, what: str = "transitions"):
        super().__init__(f"estimated {estimate:,} {what} exceeds the budget of {budget:,}")
        self.estimate = estimate
        self.budget = budget


@dataclass
class SolveStats:
    states: int
    transitions: int
    iterations: int
    wall_time: float


class Arena:
    """Adjacency of g packed for the kernels."""

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        self.n = n
        self.nw = (n + 63) // 64
        ptr = [0]
        idx = []
        for v in range(n):
            idx.extend(g.closed_neighbors(v))
            ptr.append(len(idx))
        self.nbr_ptr = np.array(ptr, dtype=np.int64)
        self.nbr_idx = np.array(idx, dtype=np.int64)
        self.nmask = np.zeros((n, self.nw), dtype=np.uint64)
        self.cmask = np.zeros((n, self.nw), dtype=np.uint64)
        for v in range(n):
            for w in g.neighbors(v):
                self.nmask[v, w >> 6] |= np.uint64(1) << np.uint64(w & 63)
            self.cmask[v] = self.nmask[v]
            self.cmask[v, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        self.full = np.zeros(self.nw, dtype=np.uint64)
        for v in range(n):
            self.full[v >> 6] |= np.uint64(1) << np.uint64(v & 63)


def _bit(row, v) -> bool:
    return bool((int(row[v >> 6]) >> (v & 63)) & 1)


def _bits(row, n) -> list[int]:
    return [v for v in range(n) if _bit(row, v)]


class SolveResult:
    """Winner and rank tables for one (graph, k, ruleset[, push budget]).

    Cop-turn states are addressed as ``(cops, r)`` with ``cops`` a sorted
    tuple of vertices, or of ``(vertex, flag)`` pairs for push-budget solves.
    ``rank`` is the number of cop moves until capture under optimal play
    (-1 robber win, -2 invalid state).  For the bodyguard game ``rank`` is
    the outer fixed-point level of post-guard states instead.
    """

    def __init__(self, graph, k, rules, push_budget, arena, configs, shift, occ, robber_win, rank, stats,
                 guard_win=None):
        self.graph = graph
        self.k = k
        self.rules = rules
        self.push_budget = push_budget
        self.arena = arena
        self.configs = configs
        self.shift = shift
        self.occ = occ
        self.robber_win = robber_win
        self.rank = rank
        self.stats = stats
        self.guard_win = guard_win
        self._binom = K.binomial_table(2 * graph.n + k + 2, k)

    # --- addressing -------------------------------------------------------
    def _item(self, c) -> int:
        if self.shift:
            v, f = c
            return 2 * v + int(bool(f))
        return int(c)

    def _decode(self, row) -> tuple:
        if self.shift:
            return tuple((int(x) >> 1, bool(x & 1)) for x in row[: self.k])
        return tuple(int(x) for x in row[: self.k])

    def index(self, cops) -> int:
        items = sorted(self._item(c) for c in cops)
        if len(items) != self.k:
            raise SolverError(f"expected {self.k} cops, got {len(items)}")
        return sum(comb(a + i, i + 1) for i, a in enumerate(items))

    def cops_at(self, t: int) -> tuple:
        return self._decode(self.configs[t])

    # --- verdicts ---------------------------------------------------------
    @property
    def is_bodyguard(self) -> bool:
        return self.rules.game is Game.BODYGUARD

    def _legal_start(self, cops) -> bool:
        if self.shift:
            return not any(f for _, f in cops)
        return True

    def valid(self, cops, r) -> bool:
        if self.is_bodyguard:
            return self.rules.colocation or r not in {vertex_of(c) for c in cops}
        return not _bit(self.occ[self.index(cops)], r)

    def cop_wins(self, cops, r) -> bool:
        """Verdict at the cop (guard) turn position ``(cops, r)``."""
        t = self.index(cops)
        if self.is_bodyguard:
            return _bit(self.guard_win[t], r)
        return not _bit(self.robber_win[t], r) and not _bit(self.occ[t], r)

    def winner(self, cops, r) -> str:
        return "cops" if self.cop_wins(cops, r) else "robber"

    def rank_of(self, cops, r) -> int:
        return int(self.rank[self.index(cops), r])

    def robber_starts(self, cops) -> list[int]:
        t = self.index(cops)
        if self.is_bodyguard and self.rules.colocation:
            return list(range(self.graph.n))
        return [v for v in range(self.graph.n) if not _bit(self.occ[t], v)]

    def placement_value(self, t: int) -> Optional[int]:
        """Worst-case rounds for placement ``t``; None if the robber escapes."""
        n = self.graph.n
        if self.is_bodyguard:
            if not self.rules.guards_first:
                raise SolverError("president-first games have no guard placement certificate")
            starts = range(n) if self.rules.colocation else [v for v in range(n) if not _bit(self.occ[t], v)]
            if all(_bit(self.guard_win[t], v) for v in starts):
                return max((int(self.rank[t, v]) for v in starts), default=0)
            return None
        if np.any(self.robber_win[t]):
            return None
        vals = [int(self.rank[t, v]) for v in range(n) if not _bit(self.occ[t], v)]
        return max(vals, default=0)

    def winning_placements(self) -> list[tuple]:
        out = []
        for t in range(self.configs.shape[0]):
            cops = self.cops_at(t)
            if self._legal_start(cops) and self.placement_value(t) is not None:
                out.append(cops)
        return out

    @property
    def cop_win(self) -> bool:
        if self.is_bodyguard and not self.rules.guards_first:
            n = self.graph.n
            return all(self._president_first_placement(r) is not None for r in range(n))
        return self.placement is not None

    @property
    def placement(self) -> Optional[tuple]:
        """Winning initial placement with the fewest worst-case rounds."""
        if getattr(self, "_placement", False) is not False:
            return self._placement
        best = None
        if not (self.is_bodyguard and not self.rules.guards_first):
            for t in range(self.configs.shape[0]):
                cops = self.cops_at(t)
                if not self._legal_start(cops):
                    continue
                val = self.placement_value(t)
                if val is not None and (best is None or val < best[0]):
                    best = (val, cops)
        self._placement = None if best is None else best[1]
        return self._placement

    def _president_first_placement(self, r) -> Optional[tuple]:
        for t in range(self.configs.shape[0]):
            if (self.rules.colocation or not _bit(self.occ[t], r)) and _bit(self.robber_win[t], r):
                return self.cops_at(t)
        return None

    # --- policies ---------------------------------------------------------
    def outcome(self, cops, r, ev: MoveEvent):
        """Robber-turn consequences of ``ev``: (cops after flags, responses) or None if illegal."""
        new = ev.cops
        g = self.graph
        rt = RobberTurnState(tuple(vertex_of(c) for c in new), r, ev.forbidden)
        if self.rules.game is Game.SURROUNDING and surround_holds(new, r, g):
            options = []
        else:
            options = sorted(robber_responses(rt, g, self.rules))
        if ev.pushers and options and self.push_budget is not None:
            if self.push_budget == 0:
                return None
            if self.shift:
                new = tuple(sorted((v, f or v == r) for v, f in new))
                if sum(f for _, f in new) > self.push_budget:
                    return None
        return new, options

    def _events(self, cops, r):
        state = PushState(cops, r) if self.shift else CopTurnState(tuple(cops), r)
        return cop_moves(state, self.graph)

    def policy(self, cops, r) -> Optional[MoveEvent]:
        """Optimal cop move from a cop-winning cop-turn state, else None."""
        cops = tuple(sorted(cops))
        if not self.cop_wins(cops, r):
            return None
        if self.is_bodyguard:
            best = None
            for ev in self._events(cops, r):
                t2 = self.index(ev.cops)
                if _bit(self.robber_win[t2], r):
                    lvl = int(self.rank[t2, r])
                    if best is None or lvl < best[0]:
                        best = (lvl, ev)
            return None if best is None else best[1]
        best = None
        for ev in self._events(cops, r):
            res = self.outcome(cops, r, ev)
            if res is None:
                continue
            new, options = res
            worst = 0
            for w in options:
                if not self.cop_wins(new, w):
                    worst = None
                    break
                worst = max(worst, self.rank_of(new, w))
            if worst is not None and (best is None or worst < best[0]):
                best = (worst, ev)
        return None if best is None else best[1]

    def robber_reply(self, cops_after, r, forbidden=frozenset()) -> Optional[int]:
        """A response that keeps the robber winning, if one exists."""
        rt = RobberTurnState(tuple(vertex_of(c) for c in cops_after), r, frozenset(forbidden))
        if self.rules.game is Game.SURROUNDING and surround_holds(cops_after, r, self.graph):
            return None
        for w in sorted(robber_responses(rt, self.graph, self.rules)):
            if not self.cop_wins(cops_after, w):
                return w
        return None


def _check(g: Graph, k: int):
    if k < 1:
        raise SolverError("need at least one cop")
    if g.n == 0 or not is_connected(g):
        raise SolverError("graph must be connected and non-empty")


def _tables(arena: Arena, k: int, alphabet: int, shift: int):
    binom = K.binomial_table(alphabet + k + 2, k)
    count = K.multiset_count(alphabet, k)
    configs = K.build_configs(count, k, binom)
    occ = K.occupancy(configs, k, shift, arena.nw)
    return binom, configs, occ


def estimate_transitions(g: Graph, k: int, rules: Ruleset = CHEATING, push_budget: Optional[int] = None) -> int:
    """Cop-move transitions processed per sweep (robber positions are bit-parallel)."""
    arena = Arena(g)
    if rules.game is Game.CHEATING_ROBOT:
        shift = 1 if push_budget is not None and 0 < push_budget < k else 0
        binom, configs, _ = _tables(arena, k, g.n << shift, shift)
        small = K.binomial_table(g.max_degree() + k + 2, k)
        return int(K.count_moves(configs, k, shift, arena.nbr_ptr, small))
    so = K.SuccessorOr(g.n, k, arena.nbr_ptr, arena.nbr_idx, K.binomial_table(g.n + k + 2, k))
    return so.work()


def solve(
    g: Graph,
    k: int,
    rules: Ruleset = CHEATING,
    *,
    push_budget: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    bodyguard_mode: str = "nested",
) -> SolveResult:
    """Solve the k-cop game on g.

    ``push_budget`` (cheating robot only) caps how many distinct cops may
    push; ``None`` or a value >= k is the unrestricted game.
    ``bodyguard_mode`` selects the co-Buchi fixed point: ``"nested"`` (exact)
    or ``"two_phase"`` (attractor of the safe core only).
    """
    _check(g, k)
    if push_budget is not None:
        if rules.game is not Game.CHEATING_ROBOT:
            raise SolverError("push budgets only apply to the cheating robot game")
        if push_budget < 0:
            raise SolverError("push budget must be >= 0")
        if push_budget >= k:
            push_budget = None
    arena = Arena(g)
    start = time.perf_counter()
    if rules.game is Game.CHEATING_ROBOT:
        return _solve_cheating(g, k, rules, arena, push_budget, budget, start)
    if rules.game is Game.SURROUNDING:
        return _solve_surrounding(g, k, rules, arena, budget, start)
    return _solve_bodyguard(g, k, rules, arena, budget, start, bodyguard_mode)


def _solve_cheating(g, k, rules, arena, push_budget, budget, start):
    n, nw = g.n, arena.nw
    mode = 0 if push_budget is None else (1 if push_budget == 0 else 2)
    shift = 1 if mode == 2 else 0
    binom, configs, occ = _tables(arena, k, n << shift, shift)
    small = K.binomial_table(g.max_degree() + k + 2, k)
    per_sweep = int(K.count_moves(configs, k, shift, arena.nbr_ptr, small))
    if per_sweep > budget:
        raise BudgetExceeded(per_sweep, budget)
    N = configs.shape[0]
    W = (~occ) & arena.full
    rank = np.full((N, n), -1, dtype=np.int32)
    rank[np.unpackbits(occ.view(np.uint8), axis=1, bitorder="little")[:, :n].astype(bool)] = -2
    if mode == 2:
        flagged = (configs[:, :k] & 1).sum(axis=1)
        over = flagged > push_budget
        W[over] = 0
        rank[over] = -2
    step = 0
    while True:
        step += 1
        DW = K.dilate(W, arena.cmask, n)
        Wn = K.cheat_sweep(configs, k, shift, occ, W, DW, arena.nbr_ptr, arena.nbr_idx, arena.nmask,
                           binom, mode, push_budget if push_budget is not None else k)
        if K.record_rank(W, Wn, rank, step, n) == 0:
            break
        W = Wn
    stats = SolveStats(int(N * n), per_sweep * step, step, time.perf_counter() - start)
    return SolveResult(g, k, rules, push_budget, arena, configs, shift, occ, W, rank, stats)


def _solve_surrounding(g, k, rules, arena, budget, start):
    n = g.n
    binom, configs, occ = _tables(arena, k, n, 0)
    so = K.SuccessorOr(n, k, arena.nbr_ptr, arena.nbr_idx, binom)
    work = so.work()
    if work > budget:
        raise BudgetExceeded(work, budget)
    N = configs.shape[0]
    surr = K.surrounded(occ, arena.nmask, n)
    W = (~occ) & arena.full
    rank = np.full((N, n), -1, dtype=np.int32)
    rank[np.unpackbits(occ.view(np.uint8), axis=1, bitorder="little")[:, :n].astype(bool)] = -2
    step = 0
    while True:
        step += 1
        DW = K.dilate(W, arena.cmask, n)
        G = so((~DW) | surr)
        Wn = W & ~G
        if K.record_rank(W, Wn, rank, step, n) == 0:
            break
        W = Wn
    stats = SolveStats(int(N * n), work * step, step, time.perf_counter() - start)
    return SolveResult(g, k, rules, None, arena, configs, 0, occ, W, rank, stats)


def _solve_bodyguard(g, k, rules, arena, budget, start, mode):
    if mode not in ("nested", "two_phase"):
        raise SolverError(f"unknown bodyguard mode {mode!r}")
    n = g.n
    binom, configs, occ = _tables(arena, k, n, 0)
    so = K.SuccessorOr(n, k, arena.nbr_ptr, arena.nbr_idx, binom)
    work = so.work()
    if work > budget:
        raise BudgetExceeded(work, budget)
    N = configs.shape[0]
    full = np.broadcast_to(arena.full, occ.shape)
    allowed = full.copy() if rules.colocation else (~occ) & full
    surr = K.surrounded(occ, arena.nmask, n)
    calls = 0

    def cpre(Z):
        # post-guard states all of whose president moves reach a guard state
        # from which the guards can move into Z
        nonlocal calls
        calls += 1
        bad = allowed & ~so(Z)
        return (~K.dilate(bad, arena.cmask, n)) & full

    level = np.full((N, n), -1, dtype=np.int32)
    X = np.zeros_like(occ)
    outer = 0
    while True:
        outer += 1
        Y = full.copy() if mode == "nested" else surr.copy()
        while True:
            if mode == "nested":
                Yn = (surr & cpre(Y)) | cpre(X) | X
            else:
                Yn = surr & cpre(Y)
            if np.array_equal(Yn, Y):
                break
            Y = Yn
        if mode == "two_phase":
            # attractor of the safe core
            Xn = Y
            while True:
                Xm = Xn | cpre(Xn)
                if np.array_equal(Xm, Xn):
                    break
                Xn = Xm
        else:
            Xn = Y
        fresh = Xn & ~X
        newbits = np.unpackbits(fresh.view(np.uint8), axis=1, bitorder="little")[:, :n].astype(bool)
        level[newbits] = outer
        if np.array_equal(Xn, X) or mode == "two_phase":
            X = Xn
            break
        X = Xn
    guard_win = so(X) & allowed
    stats = SolveStats(int(2 * N * n), work * calls, outer, time.perf_counter() - start)
    return SolveResult(g, k, rules, None, arena, configs, 0, occ, X, level, stats, guard_win=guard_win)
