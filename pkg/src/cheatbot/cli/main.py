"""cheatbot command line: gen, param, verify, trace, bench."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Optional

from .. import __version__
from ..engine import CHEATING, SURROUNDING, Game, Ruleset, vertex_of
from ..graphcore import (
    FAMILY_TAGS,
    Graph,
    GraphError,
    GraphFamily,
    degeneracy,
    generate,
    is_connected,
    FIXTURES,
    load_fixture,
    parse_edgelist,
    product,
    serialize_edgelist,
    to_dot,
)
from ..graphcore.products import PRODUCT_KINDS
from ..psi import check_ccr_le_k
from ..solver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SolveCache,
    SolverError,
    best_play_trace,
    bodyguard_number,
    cheating_robot_number,
    cop_wins_with,
    push_number,
    solve,
    surrounding_number,
)
from . import suites

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


# --- graph descriptors ------------------------------------------------------

def parse_family(spec: str) -> GraphFamily:
    """``cycle:7``, ``complete_multipartite:2,3``, ``ds-icosahedron``."""
    tag, _, params = spec.partition(":")
    tag = tag.replace("-", "_")
    try:
        nums = tuple(int(x) for x in params.split(",") if x) if params else ()
    except ValueError:
        raise InputError(f"bad parameters in {spec!r}") from None
    return GraphFamily(tag, nums)


def family_graph(spec: str) -> Graph:
    return generate(parse_family(spec))


def load_graph(arg: str) -> tuple[Graph, dict]:
    """A file path, ``fixture:NAME`` or a family descriptor such as ``cycle:5``."""
    if os.path.exists(arg):
        text = Path(arg).read_text()
        return parse_edgelist(text), {"source": "file", "path": arg}
    if arg.startswith("fixture:"):
        name = arg.split(":", 1)[1]
        if name not in FIXTURES:
            raise InputError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
        return load_fixture(name), {"source": "fixture", "name": name}
    tag = arg.partition(":")[0].replace("-", "_")
    if tag in FAMILY_TAGS:
        fam = parse_family(arg)
        return generate(fam), {"source": "family", "family": fam.tag, "params": list(fam.params)}
    raise InputError(f"{arg!r} is neither a file, fixture:NAME, nor a family descriptor")


def _connected(g: Graph) -> Graph:
    if not is_connected(g):
        raise SolverError("graph is disconnected; the games are played on connected graphs")
    return g


# --- output helpers ---------------------------------------------------------

def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit(args, obj, text: Optional[str] = None):
    payload = dumps(obj)
    if args.out:
        Path(args.out).write_text(payload)
    if args.json or text is None:
        sys.stdout.write(payload)
    elif text:
        print(text)


def _cache(args) -> SolveCache:
    return SolveCache(args.cache_dir, enabled=not args.no_cache)


def _kw(args) -> dict:
    return {"budget": args.budget, "cache": _cache(args)}


# --- commands ---------------------------------------------------------------

def cmd_gen(args):
    if args.family in ("product",):
        if len(args.params) != 3:
            raise InputError("usage: gen product KIND FAMILY:PARAMS FAMILY:PARAMS")
        kind, a, b = args.params
        if kind not in PRODUCT_KINDS:
            raise InputError(f"unknown product kind {kind!r}; known: {', '.join(PRODUCT_KINDS)}")
        g = product(family_graph(a), family_graph(b), kind)
    else:
        try:
            nums = tuple(int(p) for p in args.params)
        except ValueError:
            raise InputError("family parameters must be integers") from None
        g = generate(GraphFamily(args.family.replace("-", "_"), nums))
    text = serialize_edgelist(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    info = {"n": g.n, "m": g.m, "degeneracy": degeneracy(g)[0]}
    msg = f"n={info['n']} m={info['m']} degeneracy={info['degeneracy']}"
    print(json.dumps(info) if args.json else msg, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def _bodyguard_rules(args) -> Ruleset:
    return Ruleset(Game.BODYGUARD, colocation=not args.no_colocation, guards_first=not args.president_first)


WHICH = {"ccr": "c_cr", "sigma": "sigma", "bodyguard": "bodyguard", "push": "push_cr"}


def cmd_param(args):
    g, desc = load_graph(args.graph)
    _connected(g)
    kw = _kw(args)
    which = list(WHICH) if args.which == "all" else [args.which]
    desc["hash"] = g.content_hash()
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": "cheatbot",
        "version": __version__,
        "graph": {**desc, "n": g.n, "m": g.m},
        "degeneracy": degeneracy(g)[0],
        "parameters": {},
        "certificates": {},
        "wall_times": {},
    }
    bg_rules = _bodyguard_rules(args)
    if args.cops is not None:
        k = args.cops
        for w in which:
            t = time.perf_counter()
            if w == "push":
                res = {p: cop_wins_with(g, k, CHEATING, push_budget=p, fast=False, **kw) is not None
                       for p in range(k + 1)}
                report["parameters"]["push_budget_wins"] = {str(p): v for p, v in res.items()}
            else:
                rules = {"ccr": CHEATING, "sigma": SURROUNDING, "bodyguard": bg_rules}[w]
                cert = cop_wins_with(g, k, rules, **kw)
                report["parameters"][f"{WHICH[w]}_le_{k}"] = cert is not None
                if cert is not None:
                    report["certificates"][WHICH[w]] = cert.to_json()
            report["wall_times"][WHICH[w]] = round(time.perf_counter() - t, 4)
    else:
        ccr = None
        for w in which:
            t = time.perf_counter()
            if w == "ccr" or (w == "push" and ccr is None):
                ccr = cheating_robot_number(g, **kw)
                if w == "ccr":
                    val, cert = ccr
            if w == "sigma":
                val, cert = surrounding_number(g, **kw)
            elif w == "bodyguard":
                val, cert = bodyguard_number(g, bg_rules, **kw)
            elif w == "push":
                val, cert = push_number(g, k=ccr[0], c_cr_cert=ccr[1], **kw)
            report["parameters"][WHICH[w]] = val
            report["certificates"][WHICH[w]] = cert.to_json()
            report["wall_times"][WHICH[w]] = round(time.perf_counter() - t, 4)
    text = "\n".join(f"{k}: {v}" for k, v in report["parameters"].items())
    emit(args, report, text)
    return EXIT_OK


def _print_suite(res: suites.SuiteResult):
    for c in res.checks:
        mark = "PASS" if c.passed else ("info" if c.informational else "FAIL")
        print(f"[{mark}] ({c.criterion}) {c.claim}: expected {c.expected}, got {c.computed} ({c.seconds:.1f}s)")
    fails = res.failures()
    print(f"{res.name}: {'all checks pass' if not fails else f'{len(fails)} check(s) failed'}")


def cmd_verify(args):
    ctx = suites.Ctx(_cache(args), args.budget, long=args.long or suites.long_enabled())
    if args.suite == "paper":
        res = suites.run_paper(ctx)
    elif args.suite == "corpus":
        res = suites.run_corpus(ctx, args.max_n)
    else:
        res = suites.run_calibration(ctx)
    if args.json or args.out:
        emit(args, {"schema_version": SCHEMA_VERSION, **res.to_json()}, "" if not args.json else None)
    if not args.json:
        _print_suite(res)
    return EXIT_OK if res.passed else EXIT_FAIL


GAMES = {"ccr": CHEATING, "sigma": SURROUNDING}


def cmd_trace(args):
    g, _ = load_graph(args.graph)
    _connected(g)
    rules = GAMES[args.game]
    res = solve(g, args.cops, rules, push_budget=args.push_budget, budget=args.budget)
    start = None
    if args.start_cops is not None or args.robber is not None:
        if args.start_cops is None or args.robber is None:
            raise InputError("--start-cops and --robber go together")
        cops = tuple(int(x) for x in args.start_cops.split(","))
        if len(cops) != args.cops or any(not 0 <= c < g.n for c in cops) or not 0 <= args.robber < g.n:
            raise InputError("start position is not a legal placement")
        if res.shift:
            cops = tuple((c, False) for c in cops)
        start = (cops, args.robber)
    elif not res.cop_win:
        raise SolverError(f"{args.cops} cop(s) do not win; no trace")
    tr = best_play_trace(g, res, start)
    obj = {"schema_version": SCHEMA_VERSION, "game": rules.key, "k": args.cops,
           "push_budget": args.push_budget, **tr.to_json()}
    emit(args, obj, None)
    if args.dot:
        start_cops = Counter(vertex_of(c) for c in tr.start_cops)
        frames = [to_dot(g, cops=start_cops, robber=tr.start_robber, name="round0")]
        for i, rd in enumerate(tr.rounds, 1):
            cops = Counter(vertex_of(c) for c in rd.cops_after)
            robber = rd.robber_after if rd.robber_after is not None else rd.robber_before
            pushed = frozenset({rd.robber_before}) if rd.pushed else frozenset()
            frames.append(to_dot(g, cops=cops, robber=robber, highlight=pushed, name=f"round{i}"))
        Path(args.dot).write_text("".join(frames))
    return EXIT_OK


BENCH_FIELDS = ["graph", "n", "k", "path", "states", "transitions", "iterations", "wall_time", "verdict", "note"]


def cmd_bench(args):
    specs = []
    for fam in args.family:
        tag, _, rng = fam.partition(":")
        if rng and "-" in rng and "," not in rng:
            lo, hi = (int(x) for x in rng.split("-"))
            specs += [f"{tag}:{n}" for n in range(lo, hi + 1)]
        else:
            specs.append(fam)
    paths = ["solver", "psi"] if args.path == "both" else [args.path]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(out, fieldnames=BENCH_FIELDS)
        w.writeheader()
        for spec in specs:
            g, _ = load_graph(spec)
            _connected(g)
            for p in paths:
                for _ in range(args.repeat):
                    row = {"graph": spec, "n": g.n, "k": args.cops, "path": p, "note": ""}
                    t = time.perf_counter()
                    try:
                        if p == "solver":
                            res = solve(g, args.cops, CHEATING, budget=args.budget)
                            row.update(states=res.stats.states, transitions=res.stats.transitions,
                                       iterations=res.stats.iterations, verdict=res.cop_win)
                        else:
                            v = check_ccr_le_k(g, args.cops)
                            row.update(states=v.pairs, transitions=v.psi.removed, iterations=v.iterations,
                                       verdict=v.cop_win)
                    except BudgetExceeded as e:
                        row.update(states="", transitions=e.estimate, iterations="", verdict="",
                                   note="budget exceeded")
                    except ValueError as e:
                        row.update(states="", transitions="", iterations="", verdict="", note=str(e))
                    row["wall_time"] = f"{time.perf_counter() - t:.4f}"
                    w.writerow(row)
                    out.flush()
    finally:
        if args.out:
            out.close()
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def _global_flags(parser, suppress=False):
    # subcommands repeat the global flags; SUPPRESS keeps them from resetting values given earlier
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--threads", type=int, default=d(None), help="worker threads for the solver")
    parser.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET), help="max transitions per sweep")
    parser.add_argument("--no-cache", action="store_true", default=d(False), help="bypass the solve cache")
    parser.add_argument("--cache-dir", default=d(None), help="solve cache directory (default $CHEATBOT_CACHE_DIR)")
    parser.add_argument("--out", default=d(None), help="write the result to FILE")
    parser.add_argument("--json", action="store_true", default=d(False), help="JSON on stdout")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(argparse.ArgumentParser(add_help=False), suppress=True)

    p = _global_flags(argparse.ArgumentParser(prog="cheatbot", description="Cops and cheating robot solver"))
    p.add_argument("--version", action="version", version=f"cheatbot {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    g.add_argument("family", help=f"one of {', '.join(FAMILY_TAGS)} (dashes allowed) or 'product'")
    g.add_argument("params", nargs="*")
    g.set_defaults(func=cmd_gen)

    pa = sub.add_parser("param", parents=[common], help="compute graph parameters")
    pa.add_argument("graph", help="edge-list file, fixture:NAME or family:PARAMS")
    pa.add_argument("which", choices=["ccr", "sigma", "bodyguard", "push", "all"], nargs="?", default="all")
    pa.add_argument("--cops", type=int, default=None, help="single solve at this k instead of a search")
    pa.add_argument("--no-colocation", action="store_true", help="bodyguard: president may not share a vertex")
    pa.add_argument("--president-first", action="store_true", help="bodyguard: president placed and moves first")
    pa.set_defaults(func=cmd_param)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=["paper", "corpus", "calibrate-bodyguard"])
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--long", action="store_true", help="include long-running checks")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", parents=[common], help="optimal-play trace as JSON (and DOT)")
    t.add_argument("graph")
    t.add_argument("--game", choices=sorted(GAMES), default="ccr")
    t.add_argument("--cops", type=int, required=True)
    t.add_argument("--start-cops", default=None, help="comma-separated cop vertices")
    t.add_argument("--robber", type=int, default=None)
    t.add_argument("--push-budget", type=int, default=None)
    t.add_argument("--dot", default=None, help="also write DOT frames to this file")
    t.set_defaults(func=cmd_trace)

    b = sub.add_parser("bench", parents=[common], help="CSV timings for the solver and psi paths")
    b.add_argument("family", nargs="+", help="e.g. cycle:4-10, path:5, fixture:petersen, FILE")
    b.add_argument("--cops", type=int, default=1)
    b.add_argument("--path", choices=["solver", "psi", "both"], default="both")
    b.add_argument("--repeat", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads:
        import numba

        numba.set_num_threads(max(1, min(args.threads, numba.config.NUMBA_NUM_THREADS)))
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphError, SolverError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
