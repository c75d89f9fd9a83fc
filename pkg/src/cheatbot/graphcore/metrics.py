"""Structural metrics: degeneracy, girth, bipartiteness, connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Bucketed min-degree peeling.

    Returns ``(k, order)`` where ``order`` removes vertices one at a time,
    each with residual degree at most ``k`` when removed.
    """
    if g.n == 0:
        raise ValueError("degeneracy of the empty graph is undefined")
    deg = [len(nb) for nb in g.adj]
    buckets: list[set[int]] = [set() for _ in range(max(deg) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * g.n
    order = []
    k = 0
    d = 0
    for _ in range(g.n):
        d = max(d - 1, 0)
        while not buckets[d]:
            d += 1
        v = min(buckets[d])
        buckets[d].remove(v)
        k = max(k, d)
        removed[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                buckets[deg[w]].remove(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    return k, order


def core_vertices(g: Graph, k: int) -> list[int]:
    """Vertices of the k-core (empty if none)."""
    alive = set(g.vertices())
    deg = {v: len(g.adj[v]) for v in alive}
    stack = [v for v in alive if deg[v] < k]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < k:
                    stack.append(w)
    return sorted(alive)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, q = [s], deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    q.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def girth(g: Graph) -> Optional[int]:
    """Shortest cycle length, or ``None`` for forests.  BFS from every vertex."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


@dataclass(frozen=True)
class Metrics:
    is_tree: bool
    is_bipartite: bool
    is_connected: bool
    min_degree: int
    girth: Optional[int]


def metrics(g: Graph) -> Metrics:
    return Metrics(
        is_tree=is_tree(g),
        is_bipartite=is_bipartite(g),
        is_connected=is_connected(g),
        min_degree=g.min_degree(),
        girth=girth(g),
    )
