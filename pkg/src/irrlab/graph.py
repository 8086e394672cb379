"""Immutable simple undirected graphs and their degree machinery.

Vertices are dense integer ids 0..n-1.  Edges are unordered pairs with no
self-loops; duplicate pairs collapse at construction.  A Graph never changes
after __init__, so instances can be shared freely.  Connectivity is a
queryable property, not an invariant: disconnected and empty graphs are
first-class citizens here (several extremal questions need them).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: vertex count.
        edges: sorted tuple of (u, v) pairs with u < v.
        neighbors: per-vertex sorted tuple of adjacent vertices.
        degrees: per-vertex degree tuple, indexed by vertex id.
    """

    __slots__ = ("n", "edges", "neighbors", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        unique = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            unique.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(unique))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.neighbors = tuple(tuple(sorted(a)) for a in nbrs)
        self.degrees = tuple(len(a) for a in self.neighbors)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def from_edge_list(pairs: Iterable[tuple[int, int]], declared_n: int | None = None) -> Graph:
    """Build a Graph from unordered integer pairs.

    Without declared_n the vertex count is 1 + the largest endpoint (0 for no
    edges); with it, any endpoint >= declared_n is rejected.
    """
    pairs = list(pairs)
    for u, v in pairs:
        if u < 0 or v < 0:
            raise ValueError(f"edge ({u}, {v}) has a negative endpoint")
    if declared_n is None:
        n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    else:
        n = declared_n
    return Graph(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: optional first line "p <n>", then "u v" lines.

    Blank lines and lines starting with "#" are ignored.  Malformed content
    raises EdgeListParseError with the offending line number.
    """
    declared: int | None = None
    pairs: list[tuple[int, int]] = []
    header_allowed = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if not header_allowed:
                raise EdgeListParseError(line_no, "header must precede all edges")
            if len(parts) != 2:
                raise EdgeListParseError(line_no, f"malformed header {line!r}")
            try:
                declared = int(parts[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"malformed header {line!r}") from None
            if declared < 1:
                raise EdgeListParseError(line_no, "declared vertex count must be positive")
            header_allowed = False
            continue
        header_allowed = False
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected two endpoints, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, f"negative endpoint in {line!r}")
        if declared is not None and (u >= declared or v >= declared):
            raise EdgeListParseError(line_no, f"endpoint outside 0..{declared - 1} in {line!r}")
        pairs.append((u, v))
    if declared is None and not pairs:
        raise EdgeListParseError(1, "empty input: add a 'p <n>' header or at least one edge")
    return from_edge_list(pairs, declared)


def format_edge_list(g: Graph) -> str:
    """Render a Graph in the edge-list text format (with a "p <n>" header)."""
    lines = [f"p {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return g.degrees[v]


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees indexed by vertex id (no sorting; arrangement matters)."""
    return g.degrees


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (or n <= 1)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                stack.append(w)
    return reached == g.n


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.n - 1


def min_max_mean_degree(g: Graph) -> tuple[int, int, Fraction]:
    """(delta, Delta, mean) with the mean kept exact as a Fraction."""
    if g.n == 0:
        raise ValueError("degree statistics are undefined for the empty vertex set")
    return min(g.degrees), max(g.degrees), Fraction(2 * len(g.edges), g.n)
