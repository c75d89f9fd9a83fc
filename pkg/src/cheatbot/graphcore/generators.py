"""Named graph families with deterministic vertex labels."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError

_ICOSAHEDRON_EDGES = (
    (0, 1), (0, 5), (0, 7), (0, 8), (0, 11), (1, 2), (1, 5), (1, 6), (1, 8), (2, 3),
    (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 9), (3, 10), (4, 5), (4, 6), (4, 10),
    (4, 11), (5, 6), (5, 11), (7, 8), (7, 9), (7, 10), (7, 11), (8, 9), (9, 10), (10, 11),
)


class ParameterError(GraphError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    """Parts occupy consecutive label blocks in the order given."""
    _need(len(parts) >= 1, "complete_multipartite needs at least one part")
    _need(all(p >= 1 for p in parts), f"every part must have size >= 1, got {parts}")
    block = []
    for i, p in enumerate(parts):
        block += [i] * p
    n = len(block)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if block[u] != block[v]))


def star(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    _need(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def hypercube(d: int) -> Graph:
    """Q_d with vertex ``i`` the binary code of i."""
    _need(d >= 0, f"hypercube needs d >= 0, got {d}")
    n = 1 << d
    return Graph.from_edges(n, ((u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)))


def icosahedron() -> Graph:
    return Graph.from_edges(12, _ICOSAHEDRON_EDGES)


def ds_hypercube(d: int) -> Graph:
    """DS(Q_d), the double-subdivided d-cube."""
    from .products import double_subdivision

    _need(d >= 0, f"ds_hypercube needs d >= 0, got {d}")
    return double_subdivision(hypercube(d))


def gap_family(n: int) -> Graph:
    """G_n = DS(Q_{n-1}): 2-degenerate with cheating robot number above n-1."""
    _need(n >= 2, f"gap_family needs n >= 2, got {n}")
    return ds_hypercube(n - 1)


def ds_icosahedron() -> Graph:
    from .products import double_subdivision

    return double_subdivision(icosahedron())


@dataclass(frozen=True)
class GraphFamily:
    tag: str
    params: tuple[int, ...] = ()

    def __str__(self):
        return f"{self.tag}({','.join(map(str, self.params))})"


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_multipartite": (complete_multipartite, None),
    "star": (star, 1),
    "hypercube": (hypercube, 1),
    "icosahedron": (icosahedron, 0),
    "ds_hypercube": (ds_hypercube, 1),
    "ds_icosahedron": (ds_icosahedron, 0),
    "gap_family": (gap_family, 1),
}

FAMILY_TAGS = tuple(_FAMILIES)


def generate(family: GraphFamily) -> Graph:
    try:
        fn, arity = _FAMILIES[family.tag]
    except KeyError:
        raise ParameterError(f"unknown family {family.tag!r}; known: {', '.join(FAMILY_TAGS)}") from None
    if arity is not None and len(family.params) != arity:
        raise ParameterError(f"{family.tag} takes {arity} integer parameter(s), got {len(family.params)}")
    return fn(*family.params)
