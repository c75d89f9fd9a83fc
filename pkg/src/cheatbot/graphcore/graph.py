"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple undirected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    _edge_count: int = field(default=0, compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), m)

    def __post_init__(self):
        if self._edge_count == 0 and self.n:
            object.__setattr__(self, "_edge_count", sum(map(len, self.adj)) // 2)

    @property
    def m(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v] + (v,)))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def min_degree(self) -> int:
        return min((len(nb) for nb in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def content_hash(self) -> str:
        h = hashlib.sha256(f"{self.n}\n".encode())
        for u, v in self.edges():
            h.update(f"{u} {v}\n".encode())
        return h.hexdigest()[:16]

    def check(self) -> None:
        """Assert the simplicity / symmetry / sortedness invariants."""
        for u, nb in enumerate(self.adj):
            assert list(nb) == sorted(set(nb)), f"neighbors of {u} not sorted/unique"
            for v in nb:
                assert v != u, f"self-loop at {u}"
                assert u in self.adj[v], f"asymmetric edge {u}-{v}"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))
