"""Graph parameters: cheating robot, surrounding, bodyguard and push numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ..engine import BODYGUARD, CHEATING, SURROUNDING, Game, Ruleset
from ..graphcore import Graph, degeneracy
from .cache import NO_CACHE, SolveCache
from .solve import DEFAULT_BUDGET, SolveResult, solve, _check

ONE_ROUND_CANDIDATES = 50_000


@dataclass
class Certificate:
    """Why k cops win: an initial placement plus how the win was established.

    ``kind`` is ``"one_round"`` (matching argument: every robber start is
    captured or surrounded on the first cop move), ``"solve"`` (fixed-point
    solve; ``result`` holds the policy) or ``"cache"`` (verdict read back
    from the solve cache; call :meth:`materialize` to get a policy).
    """

    game: str
    k: int
    placement: Optional[tuple]
    kind: str
    rounds: Optional[int] = None
    push_budget: Optional[int] = None
    result: Optional[SolveResult] = field(default=None, repr=False, compare=False)

    def materialize(self, g: Graph, rules: Ruleset, budget: int = DEFAULT_BUDGET) -> SolveResult:
        if self.result is None:
            self.result = solve(g, self.k, rules, push_budget=self.push_budget, budget=budget)
        return self.result

    def to_json(self) -> dict:
        return {
            "game": self.game,
            "k": self.k,
            "placement": None if self.placement is None else list(self.placement),
            "kind": self.kind,
            "rounds": self.rounds,
            "push_budget": self.push_budget,
        }


def _matching_saturates(cops: list[int], targets: list[int], g: Graph) -> bool:
    """Can distinct cops each step (or stay) onto a distinct target, covering all targets?"""
    if len(targets) > len(cops):
        return False
    reach = [[i for i, c in enumerate(cops) if w == c or g.has_edge(w, c)] for w in targets]
    owner: dict[int, int] = {}

    def augment(t, seen):
        for i in reach[t]:
            if i in seen:
                continue
            seen.add(i)
            if i not in owner or augment(owner[i], seen):
                owner[i] = t
                return True
        return False

    return all(augment(t, set()) for t in range(len(targets)))


def captured_in_one_move(g: Graph, cops: tuple, r: int, game: Game = Game.CHEATING_ROBOT) -> bool:
    """Whether the cops at ``cops`` win on their very next move against a robber at r."""
    nbrs = list(g.neighbors(r))
    if game is Game.SURROUNDING:
        return _matching_saturates(list(cops), nbrs, g)
    # one cop steps onto r from v; the others must occupy N(r) - {v}
    tried = set()
    for i, v in enumerate(cops):
        if v in tried or not g.has_edge(v, r):
            continue
        tried.add(v)
        rest = list(cops[:i] + cops[i + 1:])
        if _matching_saturates(rest, [w for w in nbrs if w != v], g):
            return True
    return False


def one_round_placement(g: Graph, k: int, game: Game = Game.CHEATING_ROBOT,
                        limit: int = ONE_ROUND_CANDIDATES) -> Optional[tuple]:
    """Search placements on distinct vertices for a first-move win; None if none found."""
    if k >= g.n:
        return tuple(range(g.n)) + (0,) * (k - g.n)
    for count, cops in enumerate(combinations(range(g.n), k)):
        if count >= limit:
            return None
        occ = set(cops)
        if all(captured_in_one_move(g, cops, r, game) for r in range(g.n) if r not in occ):
            return cops
    return None


def _verdict(g, k, rules, push_budget, budget, cache) -> Certificate | None:
    key = cache.key(g.content_hash(), rules.key, k, push_budget)
    rec = cache.get(key)
    if rec is not None:
        if not rec["cop_win"]:
            return None
        pl = rec["placement"]
        if pl is not None:
            pl = tuple(tuple(x) if isinstance(x, list) else x for x in pl)
        return Certificate(rules.key, k, pl, "cache", rec.get("rounds"), push_budget)
    res = solve(g, k, rules, push_budget=push_budget, budget=budget)
    win = res.cop_win
    pl = res.placement if win else None
    rounds = None
    if pl is not None:
        rounds = res.placement_value(res.index(pl))
    cache.put(key, {"cop_win": win, "placement": None if pl is None else list(pl), "rounds": rounds})
    if not win:
        return None
    return Certificate(rules.key, k, pl, "solve", rounds, push_budget, res)


def cop_wins_with(g: Graph, k: int, rules: Ruleset = CHEATING, *, push_budget: Optional[int] = None,
                  budget: int = DEFAULT_BUDGET, cache: SolveCache = NO_CACHE,
                  fast: bool = True) -> Optional[Certificate]:
    """Certificate if k cops (guards) win, else None."""
    _check(g, k)
    if fast and push_budget is None and rules.game is not Game.BODYGUARD:
        pl = one_round_placement(g, k, rules.game)
        if pl is not None:
            return Certificate(rules.key, k, pl, "one_round", 1 if len(set(pl)) < g.n else 0)
    return _verdict(g, k, rules, push_budget, budget, cache)


def _search(g, rules, start, budget, cache, fast=True):
    _check(g, max(start, 1))
    k = max(start, 1)
    while True:
        cert = cop_wins_with(g, k, rules, budget=budget, cache=cache, fast=fast)
        if cert is not None:
            return k, cert
        k += 1


def cheating_robot_number(g: Graph, *, budget: int = DEFAULT_BUDGET, cache: SolveCache = NO_CACHE,
                          fast: bool = True) -> tuple[int, Certificate]:
    """Smallest k for which k cops catch the cheating robot; starts at the degeneracy."""
    return _search(g, CHEATING, degeneracy(g)[0], budget, cache, fast)


def surrounding_number(g: Graph, *, budget: int = DEFAULT_BUDGET, cache: SolveCache = NO_CACHE,
                       fast: bool = True) -> tuple[int, Certificate]:
    """Smallest k winning the surrounding game; starts at the minimum degree."""
    return _search(g, SURROUNDING, g.min_degree(), budget, cache, fast)


def bodyguard_number(g: Graph, options: Ruleset = BODYGUARD, *, budget: int = DEFAULT_BUDGET,
                     cache: SolveCache = NO_CACHE) -> tuple[int, Certificate]:
    """Smallest number of guards that eventually always surround the president."""
    if options.game is not Game.BODYGUARD:
        raise ValueError("bodyguard_number needs a bodyguard ruleset")
    return _search(g, options, g.min_degree(), budget, cache)


def push_number(g: Graph, *, k: Optional[int] = None, c_cr_cert: Optional[Certificate] = None,
                budget: int = DEFAULT_BUDGET, cache: SolveCache = NO_CACHE) -> tuple[int, Certificate]:
    """Least push budget p for which c_cr(g) cops still win.

    A first-move capture involves no push at all, so a one-round
    certificate gives p = 0 without a budgeted solve.
    """
    if k is None:
        k, c_cr_cert = cheating_robot_number(g, budget=budget, cache=cache)
    if c_cr_cert is not None and c_cr_cert.kind == "one_round":
        return 0, Certificate(CHEATING.key, k, c_cr_cert.placement, "one_round", c_cr_cert.rounds, 0)
    for p in range(k):
        cert = cop_wins_with(g, k, CHEATING, push_budget=p, budget=budget, cache=cache, fast=False)
        if cert is not None:
            return p, cert
    cert = c_cr_cert or cop_wins_with(g, k, CHEATING, budget=budget, cache=cache)
    return k, cert


@dataclass
class ParameterReport:
    graph_hash: str
    n: int
    m: int
    degeneracy: int
    c_cr: Optional[int] = None
    sigma: Optional[int] = None
    bodyguard: Optional[int] = None
    push_cr: Optional[int] = None
    certificates: dict = field(default_factory=dict)

    def chain_holds(self) -> bool:
        """degeneracy <= c_cr <= sigma <= c_cr + p_cr and p_cr <= c_cr, over computed values."""
        ok = True
        if self.c_cr is not None:
            ok &= self.degeneracy <= self.c_cr
        if self.c_cr is not None and self.sigma is not None:
            ok &= self.c_cr <= self.sigma
            if self.push_cr is not None:
                ok &= self.sigma <= self.c_cr + self.push_cr
        if self.c_cr is not None and self.push_cr is not None:
            ok &= self.push_cr <= self.c_cr
        return bool(ok)

    def to_json(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "n": self.n,
            "m": self.m,
            "degeneracy": self.degeneracy,
            "c_cr": self.c_cr,
            "sigma": self.sigma,
            "bodyguard": self.bodyguard,
            "push_cr": self.push_cr,
            "certificates": {k: c.to_json() for k, c in self.certificates.items()},
        }


PARAMETERS = ("c_cr", "sigma", "bodyguard", "push_cr")


def parameter_report(g: Graph, which=PARAMETERS, *, bodyguard_options: Ruleset = BODYGUARD,
                     budget: int = DEFAULT_BUDGET, cache: SolveCache = NO_CACHE) -> ParameterReport:
    _check(g, 1)
    rep = ParameterReport(g.content_hash(), g.n, g.m, degeneracy(g)[0])
    which = set(which)
    unknown = which - set(PARAMETERS)
    if unknown:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    if "c_cr" in which or "push_cr" in which:
        rep.c_cr, cert = cheating_robot_number(g, budget=budget, cache=cache)
        rep.certificates["c_cr"] = cert
    if "sigma" in which:
        rep.sigma, rep.certificates["sigma"] = surrounding_number(g, budget=budget, cache=cache)
    if "bodyguard" in which:
        rep.bodyguard, rep.certificates["bodyguard"] = bodyguard_number(
            g, bodyguard_options, budget=budget, cache=cache)
    if "push_cr" in which:
        rep.push_cr, rep.certificates["push_cr"] = push_number(
            g, k=rep.c_cr, c_cr_cert=rep.certificates["c_cr"], budget=budget, cache=cache)
    return rep
