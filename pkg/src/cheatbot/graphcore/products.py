"""Graph products and the double subdivision."""

from __future__ import annotations

from .graph import Graph, GraphError

PRODUCT_KINDS = ("cartesian", "strong", "lexicographic")


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """Product of ``g`` and ``h``; vertex ``(u, v)`` gets label ``u * h.n + v``.

    cartesian: ux in E(g), v = y  or  u = x, vy in E(h)
    strong: cartesian edges plus ux in E(g), vy in E(h)
    lexicographic: ux in E(g) (any v, y)  or  u = x, vy in E(h)
    """
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"unknown product kind {kind!r}")
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be nonempty")
    nh = h.n
    edges = set()

    def add(a, b):
        edges.add((a, b) if a < b else (b, a))

    for u in range(g.n):
        for v, y in h.edges():
            add(u * nh + v, u * nh + y)
    for u, x in g.edges():
        if kind == "lexicographic":
            for v in range(nh):
                for y in range(nh):
                    add(u * nh + v, x * nh + y)
            continue
        for v in range(nh):
            add(u * nh + v, x * nh + v)
        if kind == "strong":
            for v, y in h.edges():
                add(u * nh + v, x * nh + y)
                add(u * nh + y, x * nh + v)
    return Graph.from_edges(g.n * nh, sorted(edges))


def strong_power(g: Graph, k: int) -> Graph:
    out = g
    for _ in range(k - 1):
        out = product(out, g, "strong")
    return out


def double_subdivision(g: Graph) -> Graph:
    """Replace every edge xy by a 4-cycle x-a-y-s-x.

    Originals keep labels 0..n-1.  Edges are taken in sorted order and each
    contributes the apex ``a`` then the subdivision vertex ``s``.
    """
    edges = []
    nxt = g.n
    for x, y in g.edges():
        apex, sub = nxt, nxt + 1
        nxt += 2
        edges += [(x, apex), (y, apex), (x, sub), (y, sub)]
    return Graph.from_edges(nxt, edges)
