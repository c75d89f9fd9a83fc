"""Edge-list text format and DOT export.

Edge-list format: '#' starts a comment; the first token is the vertex count;
every later non-blank line is ``u v`` with ``0 <= u < v < n``.
"""

from __future__ import annotations

from importlib import resources
from typing import Mapping, Optional

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, msg: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 1:
                raise ParseError("expected the vertex count alone on the first line", lineno)
            try:
                n = int(toks[0])
            except ValueError:
                raise ParseError(f"vertex count {toks[0]!r} is not an integer", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1} in {line!r}", lineno)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count")
    return Graph.from_edges(n, edges)


def serialize_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edgelist(g))


def load_fixture(name: str) -> Graph:
    """Load one of the edge-list fixtures shipped in ``cheatbot/data``."""
    ref = resources.files("cheatbot") / "data" / f"{name}.edges"
    return parse_edgelist(ref.read_text(encoding="utf-8"))


FIXTURES = ("heawood", "petersen", "square_ring_chords", "square_ring", "chorded_path", "pendant_square", "k23")


def to_dot(
    g: Graph,
    cops: Optional[Mapping[int, int]] = None,
    robber: Optional[int] = None,
    highlight: frozenset = frozenset(),
    name: str = "G",
) -> str:
    """Undirected DOT; ``cops`` maps vertex -> cop count."""
    cops = cops or {}
    out = [f"graph {name} {{"]
    for v in g.vertices():
        label = str(v)
        attrs = []
        if cops.get(v):
            label += f"\\nC{cops[v]}" if cops[v] > 1 else "\\nC"
            attrs.append('style=filled fillcolor="lightblue"')
        if v == robber:
            label += "\\nR"
            attrs.append("shape=doublecircle")
        if v in highlight:
            attrs.append('color="red" penwidth=2')
        attrs.insert(0, f'label="{label}"')
        out.append(f"  {v} [{' '.join(attrs)}];")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
