"""Named regression checks, grouped by acceptance criterion."""

from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from ..engine import BODYGUARD, BODYGUARD_OPTION_SETS, CHEATING, Ruleset
from ..graphcore import (
    Graph,
    complete,
    complete_multipartite,
    cycle,
    degeneracy,
    double_subdivision,
    ds_hypercube,
    ds_icosahedron,
    is_bipartite,
    is_tree,
    load_fixture,
    path,
    product,
    star,
)
from ..graphcore.corpus import connected_graphs, trees
from ..psi import check_ccr_le_k
from ..solver import (
    NO_CACHE,
    bodyguard_number,
    cheating_robot_number,
    parameter_report,
    push_number,
    solve,
    surrounding_number,
)

LONG_ENV = "CHEATBOT_LONG"


@dataclass
class Check:
    criterion: int
    claim: str
    expected: str
    computed: str
    passed: bool
    seconds: float = 0.0
    tag: str = "PAPER"
    informational: bool = False

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
            "tag": self.tag,
            "informational": self.informational,
        }


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.informational]

    def to_json(self) -> dict:
        return {"suite": self.name, "pass": self.passed, "checks": [c.to_json() for c in self.checks]}


class Ctx:
    def __init__(self, cache=NO_CACHE, budget=None, long=False):
        self.cache = cache
        self.kw = {"cache": cache}
        if budget is not None:
            self.kw["budget"] = budget
        self.long = long

    def ccr(self, g):
        return cheating_robot_number(g, **self.kw)

    def sigma(self, g):
        return surrounding_number(g, **self.kw)

    def push(self, g):
        k, cert = self.ccr(g)
        return push_number(g, k=k, c_cr_cert=cert, **self.kw)[0]

    def bg(self, g, rules=BODYGUARD):
        return bodyguard_number(g, rules, **self.kw)[0]

    def solve_kw(self):
        return {k: v for k, v in self.kw.items() if k == "budget"}


def _strong(a, b):
    return product(a, b, "strong")


def _lex(a, b):
    return product(a, b, "lexicographic")


def _check(out, criterion, claim, expected, fn: Callable, ok: Callable, tag="PAPER", informational=False):
    t = time.perf_counter()
    val = fn()
    out.append(Check(criterion, claim, str(expected), str(val), bool(ok(val)), time.perf_counter() - t,
                     tag, informational))
    return val


def criterion_1(ctx, max_n=7):
    out = []
    t = time.perf_counter()
    wrong = []
    count = 0
    for g in connected_graphs(max_n, min_n=1):
        count += 1
        one = ctx.ccr(g)[0] == 1
        if one != is_tree(g):
            wrong.append(sorted(g.edges()))
    out.append(Check(1, f"c_cr = 1 iff tree, {count} connected graphs <= {max_n} vertices", "0 exceptions",
                     f"{len(wrong)} exceptions" + (f", first {wrong[0]}" if wrong else ""), not wrong,
                     time.perf_counter() - t))
    return out


def criterion_2(ctx):
    out = []
    for n in range(3, 11):
        g = cycle(n)
        _check(out, 2, f"c_cr(C_{n}), p_cr(C_{n})", (2, 0), lambda: (ctx.ccr(g)[0], ctx.push(g)),
               lambda v: v == (2, 0))
    return out


def criterion_3(ctx):
    out = []
    for n in range(3, 8):
        g = complete(n)
        _check(out, 3, f"c_cr(K_{n}), p_cr(K_{n})", (n - 1, 0), lambda: (ctx.ccr(g)[0], ctx.push(g)),
               lambda v, n=n: v == (n - 1, 0))
    for parts, want in (((2, 3), 2), ((2, 2, 2), 4)):
        g = complete_multipartite(*parts)
        name = "K_{" + ",".join(map(str, parts)) + "}"
        _check(out, 3, f"c_cr({name}), p_cr({name})", (want, 0), lambda: (ctx.ccr(g)[0], ctx.push(g)),
               lambda v, w=want: v == (w, 0))
    return out


def criterion_4(ctx):
    out = []
    g = load_fixture("heawood")
    _check(out, 4, "Heawood graph: 3 cops lose (so c_cr >= 4)", "robber wins",
           lambda: "cops win" if solve(g, 3, **ctx.solve_kw()).cop_win else "robber wins",
           lambda v: v == "robber wins")
    return out


def criterion_5(ctx):
    out = []
    G, H = load_fixture("square_ring_chords"), load_fixture("square_ring")
    _check(out, 5, "c_cr(square ring with chords)", 2, lambda: ctx.ccr(G)[0], lambda v: v == 2)
    _check(out, 5, "c_cr(square ring) >= 3", ">= 3", lambda: ctx.ccr(H)[0], lambda v: v >= 3)
    return out


def criterion_6(ctx):
    out = []
    f2, f3 = load_fixture("chorded_path"), load_fixture("pendant_square")
    _check(out, 6, "chorded path: c_cr = 2, p_cr >= 1", "(2, >=1)", lambda: (ctx.ccr(f2)[0], ctx.push(f2)),
           lambda v: v[0] == 2 and v[1] >= 1)
    _check(out, 6, "pendant square: c_cr = sigma = 2, p_cr >= 1", "(2, 2, >=1)",
           lambda: (ctx.ccr(f3)[0], ctx.sigma(f3)[0], ctx.push(f3)),
           lambda v: v[0] == 2 and v[1] == 2 and v[2] >= 1)
    return out


def criterion_7(ctx, max_n=7):
    out = []
    t = time.perf_counter()
    bad = []
    count = 0
    high = 0
    high_bad = []
    pmax = 0
    for g in connected_graphs(max_n, min_n=1):
        count += 1
        rep = parameter_report(g, ("c_cr", "sigma", "push_cr"), **ctx.kw)
        if not rep.chain_holds():
            bad.append((sorted(g.edges()), rep.to_json()))
        pmax = max(pmax, rep.push_cr)
        c = rep.c_cr
        if sum(1 for v in range(g.n) if g.degree(v) >= c + 1) >= c + 1:
            high += 1
            if rep.push_cr < 1:
                high_bad.append(sorted(g.edges()))
    secs = time.perf_counter() - t
    out.append(Check(7, f"degeneracy <= c_cr <= sigma <= c_cr + p_cr, p_cr <= c_cr on {count} graphs",
                     "0 violations", f"{len(bad)} violations", not bad, secs))
    out.append(Check(7, f"c_cr + 1 vertices of degree >= c_cr + 1 imply p_cr >= 1 ({high} graphs)",
                     "0 violations", f"{len(high_bad)} violations", not high_bad, 0.0))
    out.append(Check(7, "largest push number found (p_cr <= 1 question)", "reported", pmax, True, 0.0,
                     "DERIVED", informational=True))
    return out


def _leaves(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def bodyguard_checks(ctx, rules: Ruleset) -> list[Check]:
    out = []
    for n in range(3, 10):
        want = 2 if n <= 5 else 3
        g = cycle(n)
        _check(out, 8, f"B(C_{n}) [{rules.key}]", want, lambda g=g: ctx.bg(g, rules), lambda v, w=want: v == w)
    t = time.perf_counter()
    wrong = []
    count = 0
    for n in range(3, 9):
        for tr in trees(n):
            count += 1
            b = ctx.bg(tr, rules)
            if b != _leaves(tr):
                wrong.append((sorted(tr.edges()), b, _leaves(tr)))
    out.append(Check(8, f"B(T) = leaves for {count} trees on 3..8 vertices [{rules.key}]", "0 exceptions",
                     f"{len(wrong)} exceptions" + (f", first {wrong[0]}" if wrong else ""), not wrong,
                     time.perf_counter() - t))
    _check(out, 8, f"B(K_2) [{rules.key}] (2 leaves; degenerate)", 2, lambda: ctx.bg(path(2), rules),
           lambda v: v == 2, tag="INFO", informational=True)
    g = _strong(path(3), path(3))
    _check(out, 8, f"B(P_3 x P_3) [{rules.key}]", 4, lambda: ctx.bg(g, rules), lambda v: v == 4)
    return out


def criterion_8(ctx):
    out = bodyguard_checks(ctx, BODYGUARD)
    if not all(c.passed for c in out if not c.informational):
        passing = [r.key for r in BODYGUARD_OPTION_SETS
                   if all(c.passed for c in bodyguard_checks(ctx, r) if not c.informational)]
        out.append(Check(8, "calibration: option sets passing every bodyguard check", "at least one",
                         passing or "none", bool(passing), 0.0, "DERIVED"))
    return out


def criterion_9(ctx):
    out = []
    C3, C4, P2, P3, K3 = cycle(3), cycle(4), path(2), path(3), complete(3)
    cases = [
        ("C_3 x P_2", _strong(C3, P2), 5), ("C_4 x P_2", _strong(C4, P2), 5), ("C_3 x P_3", _strong(C3, P3), 5),
        ("C_3 x C_3", _strong(C3, C3), 8), ("C_3 x C_4", _strong(C3, C4), 8), ("K_2 x P_3", _strong(P2, P3), 3),
        ("K_2 x C_3", _strong(P2, C3), 5), ("K_2 x K_3", _strong(P2, K3), 5),
        ("P_2 . P_2", _lex(P2, P2), 3), ("P_3 . P_2", _lex(P3, P2), 3), ("C_3 . P_2", _lex(C3, P2), 5),
        ("P_2 . C_3", _lex(P2, C3), 5), ("C_3 . C_3", _lex(C3, C3), 8),
    ]
    for name, g, want in cases:
        _check(out, 9, f"c_cr({name})", want, lambda g=g: ctx.ccr(g)[0], lambda v, w=want: v == w)
    return out


def criterion_10(ctx):
    out = []
    g = _strong(path(3), path(3))
    _check(out, 10, "c_cr(P_3 x P_3) <= 4", "<= 4", lambda: ctx.ccr(g)[0], lambda v: v <= 4)
    _check(out, 10, "sigma(P_3 x P_3) <= 5", "<= 5", lambda: ctx.sigma(g)[0], lambda v: v <= 5)
    h = _strong(cycle(3), cycle(4))
    _check(out, 10, "sigma(C_3 x C_4)", 8, lambda: ctx.sigma(h)[0], lambda v: v == 8)
    return out


def criterion_11(ctx):
    out = []
    base = {"P_3": path(3), "P_4": path(4), "C_3": cycle(3), "C_4": cycle(4), "K_3": complete(3),
            "K_{1,3}": star(3)}
    num = {k: ctx.ccr(g)[0] for k, g in base.items()}
    for a, b in itertools.combinations_with_replacement(base, 2):
        g = product(base[a], base[b], "cartesian")
        bound = num[a] + num[b]
        _check(out, 11, f"c_cr({a} [] {b}) <= c_cr({a}) + c_cr({b})", f"<= {bound}", lambda g=g: ctx.ccr(g)[0],
               lambda v, b=bound: v <= b)
    return out


def criterion_12(ctx):
    out = []
    _check(out, 12, "c_cr(DS(C_4)) > 2: 2 cops lose", "robber wins",
           lambda: "cops win" if solve(ds_hypercube(2), 2, **ctx.solve_kw()).cop_win else "robber wins",
           lambda v: v == "robber wins")
    _check(out, 12, "c_cr(DS(Q_3)) > 3: 3 cops lose", "robber wins",
           lambda: "cops win" if solve(ds_hypercube(3), 3, **ctx.solve_kw()).cop_win else "robber wins",
           lambda v: v == "robber wins")
    return out


def criterion_13(ctx):
    out = []
    g = ds_icosahedron()
    _check(out, 13, "DS(I_20): 3 cops lose", "robber wins",
           lambda: "cops win" if solve(g, 3, **ctx.solve_kw()).cop_win else "robber wins",
           lambda v: v == "robber wins")
    if ctx.long:
        _check(out, 13, "DS(I_20): 4 cops win (long run)", "cops win",
               lambda: "cops win" if solve(g, 4, budget=10**12).cop_win else "robber wins",
               lambda v: v == "cops win")
    return out


def criterion_14(ctx, max_n=6):
    out = []
    t = time.perf_counter()
    wrong = []
    count = 0
    jobs = [(g, k) for g in connected_graphs(max_n, min_n=1) for k in (1, 2)]
    jobs += [(cycle(n), 2) for n in range(3, 9)]
    jobs += [(load_fixture(f), k) for f in ("square_ring_chords", "square_ring") for k in (2, 3)]
    for g, k in jobs:
        count += 1
        if check_ccr_le_k(g, k).cop_win != solve(g, k, **ctx.solve_kw()).cop_win:
            wrong.append((sorted(g.edges()), k))
    out.append(Check(14, f"psi refinement agrees with the solver on {count} (graph, k) instances", "0 disagreements",
                     f"{len(wrong)} disagreements" + (f", first {wrong[0]}" if wrong else ""), not wrong,
                     time.perf_counter() - t))
    return out


def random_graphs(count=200, max_n=12, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        p = rng.random()
        yield Graph.from_edges(n, [e for e in pairs if rng.random() < p])


def ds_structure_ok(g: Graph) -> bool:
    d = double_subdivision(g)
    if d.n != g.n + 2 * g.m or not is_bipartite(d):
        return False
    return all(sum(1 for w in d.neighbors(x) if w < g.n) < 3 for x in range(g.n, d.n))


def criterion_15(ctx, count=200):
    out = []
    t = time.perf_counter()
    bad = [sorted(g.edges()) for g in random_graphs(count) if not ds_structure_ok(g)]
    out.append(Check(15, f"DS(G): n + 2m vertices, bipartite, no new vertex next to 3 originals ({count} graphs)",
                     "0 violations", f"{len(bad)} violations", not bad, time.perf_counter() - t))
    return out


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
    13: criterion_13, 14: criterion_14, 15: criterion_15,
}
PAPER_CRITERIA = (2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13)


def run_paper(ctx) -> SuiteResult:
    res = SuiteResult("paper")
    for c in PAPER_CRITERIA:
        res.checks += CRITERIA[c](ctx)
    return res


def run_corpus(ctx, max_n=7) -> SuiteResult:
    res = SuiteResult("corpus")
    res.checks += criterion_1(ctx, max_n)
    res.checks += criterion_7(ctx, max_n)
    res.checks += criterion_14(ctx, min(max_n, 6))
    res.checks += criterion_15(ctx)
    return res


def run_calibration(ctx) -> SuiteResult:
    res = SuiteResult("calibrate-bodyguard")
    for rules in BODYGUARD_OPTION_SETS:
        checks = bodyguard_checks(ctx, rules)
        res.checks += [Check(8, c.claim, c.expected, c.computed, c.passed, c.seconds, c.tag, True)
                       for c in checks]
        ok = all(c.passed for c in checks if not c.informational)
        default = " (default)" if rules == BODYGUARD else ""
        res.checks.append(Check(8, f"option set {rules.key}{default} passes every bodyguard check", "pass",
                                "pass" if ok else "fail", ok, 0.0, "DERIVED", informational=rules != BODYGUARD))
    passing = [c for c in res.checks if c.claim.startswith("option set") and c.passed]
    res.checks.append(Check(8, "some option set passes", "at least one", len(passing), bool(passing), 0.0,
                            "DERIVED"))
    return res


def long_enabled() -> bool:
    return os.environ.get(LONG_ENV, "") not in ("", "0")
