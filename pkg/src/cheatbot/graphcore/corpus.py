"""Exhaustive small-graph corpora (one graph per isomorphism class)."""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from .graph import Graph
from .metrics import is_connected


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All connected graphs on ``min_n..max_n`` vertices, up to isomorphism.

    Backed by the networkx graph atlas, which covers every graph on at most
    seven vertices.
    """
    if max_n > 7:
        raise ValueError("the graph atlas only covers graphs on at most 7 vertices")
    for g in nx.graph_atlas_g():
        if min_n <= g.number_of_nodes() <= max_n:
            h = Graph.from_networkx(g)
            if is_connected(h):
                yield h


def trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph.from_networkx(t)
