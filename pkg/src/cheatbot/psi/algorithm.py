"""The psi characterization of c_cr(G) > k and its refinement algorithm.

Cop configurations are labeled k-tuples (vertices of the k-fold strong
power), indexed in base n.  The domain is every pair (T1, T2) with T2 in
the closed neighbourhood of T1, so the all-pass move T1 -> T1 is included.
psi(T1 T2) is stored as an (n,) row of uint64 bitsets: row[r1] holds the
allowed r2 for that r1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

import numpy as np

from ..engine import CHEATING, CopTurnState, RobberTurnState, cop_moves, robber_responses
from ..graphcore import Graph, is_connected

MAX_VERTICES = 64


def surroundable_set(g: Graph, cops) -> frozenset[int]:
    """Robber vertices the cops at ``cops`` capture with their next move."""
    cops = tuple(sorted(cops))
    occ = set(cops)
    out = set()
    for r in g.vertices():
        if r in occ:
            continue
        for ev in cop_moves(CopTurnState(cops, r), g):
            rt = RobberTurnState(ev.cops, r, ev.forbidden)
            if not robber_responses(rt, g, CHEATING):
                out.add(r)
                break
    return frozenset(out)


@dataclass
class PsiMap:
    g: Graph
    k: int
    robber_pass: bool
    configs: np.ndarray          # (n**k, k) labeled tuples
    src: np.ndarray              # (P,) config index of T1
    dst: np.ndarray              # (P,) config index of T2
    psi: np.ndarray              # (P, n) uint64
    iterations: int = 0
    removed: int = 0
    history: list = field(default_factory=list)

    @property
    def pairs(self) -> int:
        return int(self.src.shape[0])

    def entry(self, t1, t2) -> set[tuple[int, int]]:
        n = self.g.n
        i1 = _index(t1, n)
        i2 = _index(t2, n)
        hits = np.nonzero((self.src == i1) & (self.dst == i2))[0]
        if hits.size == 0:
            raise KeyError(f"{tuple(t2)} is not one cop move away from {tuple(t1)}")
        row = self.psi[hits[0]]
        return {(r1, r2) for r1 in range(n) for r2 in range(n) if (int(row[r1]) >> r2) & 1}

    def sizes(self) -> np.ndarray:
        return _popcount(self.psi).sum(axis=1)

    def empty_entries(self) -> list[tuple[tuple, tuple]]:
        idx = np.nonzero(~self.psi.any(axis=1))[0]
        return [(tuple(self.configs[self.src[p]]), tuple(self.configs[self.dst[p]])) for p in idx]

    def has_empty(self) -> bool:
        return bool((~self.psi.any(axis=1)).any())

    def dump(self, path) -> None:
        sizes = self.sizes()
        order = np.argsort(sizes, kind="stable")
        entries = [
            {
                "T1": [int(x) for x in self.configs[self.src[p]]],
                "T2": [int(x) for x in self.configs[self.dst[p]]],
                "size": int(sizes[p]),
            }
            for p in order
        ]
        with open(path, "w") as fh:
            json.dump({"n": self.g.n, "k": self.k, "iterations": self.iterations,
                       "empty": int((sizes == 0).sum()), "entries": entries}, fh, indent=1)


def _index(t, n) -> int:
    i = 0
    for v in t:
        i = i * n + int(v)
    return i


def _popcount(a: np.ndarray) -> np.ndarray:
    b = a.view(np.uint8).reshape(a.shape + (8,))
    return np.unpackbits(b, axis=-1).sum(axis=-1)


def _masks(n):
    return np.array([1 << v for v in range(n)], dtype=np.uint64)


def init_psi(g: Graph, k: int, robber_pass: bool = True) -> PsiMap:
    """Every robber move (r1, r2) not losing at once, for every cop move (T1, T2).

    ``robber_pass`` also admits r2 = r1; the bare edge condition excludes it.
    """
    if k < 1:
        raise ValueError("need at least one cop")
    n = g.n
    if n > MAX_VERTICES:
        raise ValueError(f"psi supports at most {MAX_VERTICES} vertices")
    configs = np.array(list(product(range(n), repeat=k)), dtype=np.int64).reshape(-1, k)
    bits = _masks(n)
    full = np.uint64((1 << n) - 1) if n < 64 else np.uint64(2**64 - 1)
    s_cache: dict = {}
    good = np.zeros(configs.shape[0], dtype=np.uint64)  # V - (V_T u S_T)
    for t, tup in enumerate(configs):
        key = tuple(sorted(tup))
        if key not in s_cache:
            bad = set(key) | surroundable_set(g, key)
            s_cache[key] = np.uint64(sum(1 << v for v in bad))
        good[t] = full & ~s_cache[key]
    src, dst = [], []
    for t, tup in enumerate(configs):
        for t2 in product(*(g.closed_neighbors(int(v)) for v in tup)):
            src.append(t)
            dst.append(_index(t2, n))
    src = np.array(src, dtype=np.int64)
    dst = np.array(dst, dtype=np.int64)
    adj = np.zeros(n, dtype=np.uint64)
    for v in range(n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << w
        if robber_pass:
            m |= 1 << v
        adj[v] = m
    r1_ok = (good[src][:, None] & bits[None, :]) != 0
    psi = np.where(r1_ok, adj[None, :] & good[dst][:, None], np.uint64(0)).astype(np.uint64)
    rows = np.arange(src.shape[0])
    for i in range(k):
        u = configs[dst, i]
        v = configs[src, i]
        psi[rows, u] &= ~bits[v]
    return PsiMap(g, k, robber_pass, configs, src, dst, psi)


def refine_to_fixpoint(pm: PsiMap, second_rule: bool = True, max_iter: Optional[int] = None) -> PsiMap:
    """Prune psi until stable, in place.

    First rule: (r1, r2) survives in psi(T1 T2) only if r2 is a first entry of
    psi(T2 T3) for every move T2 -> T3.  Second rule (``second_rule``): (r1, r2)
    survives in psi(T2 T3) only if r1 is a second entry of psi(T1 T2) for
    every move T1 -> T2.
    """
    n = pm.g.n
    bits = _masks(n)
    N = pm.configs.shape[0]
    ones = np.uint64(2**64 - 1)
    src, dst = pm.src, pm.dst
    while max_iter is None or pm.iterations < max_iter:
        before = int(_popcount(pm.psi).sum())
        first = ((pm.psi != 0) * bits[None, :]).sum(axis=1, dtype=np.uint64)
        A = np.full(N, ones, dtype=np.uint64)
        np.bitwise_and.at(A, src, first)
        pm.psi &= A[dst][:, None]
        if second_rule:
            second = np.bitwise_or.reduce(pm.psi, axis=1)
            B = np.full(N, ones, dtype=np.uint64)
            np.bitwise_and.at(B, dst, second)
            keep = (B[src][:, None] & bits[None, :]) != 0
            pm.psi[~keep] = 0
        pm.iterations += 1
        after = int(_popcount(pm.psi).sum())
        pm.history.append(after)
        pm.removed += before - after
        if after == before:
            break
    return pm


@dataclass
class PsiVerdict:
    cop_win: bool
    iterations: int
    pairs: int
    empty: int
    psi: PsiMap = field(repr=False)

    @property
    def text(self) -> str:
        return f"c_cr <= {self.psi.k}" if self.cop_win else f"c_cr > {self.psi.k}"


def check_ccr_le_k(g: Graph, k: int, *, second_rule: bool = True, robber_pass: bool = True) -> PsiVerdict:
    """Decide c_cr(g) <= k via psi: the cops win iff some entry ends up empty."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    pm = refine_to_fixpoint(init_psi(g, k, robber_pass), second_rule=second_rule)
    empty = int((~pm.psi.any(axis=1)).sum())
    return PsiVerdict(empty > 0, pm.iterations, pm.pairs, empty, pm)
