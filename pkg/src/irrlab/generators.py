"""Constructors for the graph families under study, plus exhaustive enumerators.

Vertex labeling is fixed and documented per family so degree sequences come
out reproducible: spine/center vertices first, pendant vertices after.  The
enumerators are labeled (no isomorphism reduction) and desk-scale capped.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .graph import Graph, is_connected, is_tree

TREE_ENUM_CAP = 10
GRAPH_ENUM_CAP = 6


def path(n: int) -> Graph:
    """Path on vertices 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def double_star(r: int, k: int) -> Graph:
    """Two adjacent centers: vertex 0 with degree k, vertex 1 with degree r.

    Vertex 0 carries k-1 pendant leaves (ids 2..k), vertex 1 carries r-1
    (the remaining ids).  r=1 degenerates to a star centered at 0.
    """
    if k < 2:
        raise ValueError(f"double star needs k >= 2, got {k}")
    if r < 1:
        raise ValueError(f"double star needs r >= 1, got {r}")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(k - 1))
    edges.extend((1, k + 1 + i) for i in range(r - 1))
    return Graph(k + r, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with part A = 0..m-1 (degree n) and part B = m..m+n-1 (degree m)."""
    if m < 1 or n < 1:
        raise ValueError(f"complete bipartite needs both part sizes >= 1, got ({m}, {n})")
    return Graph(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def caterpillar_uniform(n: int, m: int) -> Graph:
    """Caterpillar with spine x_1..x_n and m pendant leaves on every spine vertex.

    Spine vertices are 0..n-1 along the path; the leaves of spine vertex i are
    n + i*m .. n + i*m + m - 1.  n=1 degenerates to a star on m+1 vertices.
    """
    if n < 1:
        raise ValueError(f"caterpillar needs n >= 1 spine vertices, got {n}")
    if m < 1:
        raise ValueError(f"caterpillar needs m >= 1 leaves per spine vertex, got {m}")
    edges = [(i, i + 1) for i in range(n - 1)]
    for i in range(n):
        edges.extend((i, n + i * m + j) for j in range(m))
    return Graph(n * (m + 1), edges)


def caterpillar_from_spine(degrees: Sequence[int]) -> Graph:
    """Caterpillar realizing the given spine degree sequence exactly.

    Spine vertices 0..k-1 form a path; vertex i then receives enough pendant
    leaves to reach degree degrees[i] (ends need degrees >= 1, interior >= 2).
    Leaves are appended in spine order.  A single-entry sequence realizes a
    star whose center has the requested degree.
    """
    k = len(degrees)
    if k < 1:
        raise ValueError("spine sequence must be non-empty")
    for i, d in enumerate(degrees):
        spine_deg = (1 if k > 1 else 0) if i in (0, k - 1) else 2
        if d < max(spine_deg, 1):
            raise ValueError(
                f"spine degree {d} at position {i} is unrealizable "
                f"(needs >= {max(spine_deg, 1)})"
            )
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, d in enumerate(degrees):
        spine_deg = (1 if k > 1 else 0) if i in (0, k - 1) else 2
        for _ in range(d - spine_deg):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def prufer_decode(code: Sequence[int]) -> Graph:
    """Tree on len(code)+2 vertices decoded from a Prufer code."""
    n = len(code) + 2
    for a in code:
        if not 0 <= a < n:
            raise ValueError(f"code entry {a} outside 0..{n - 1}")
    deg = [1] * n
    for a in code:
        deg[a] += 1
    edges = _decode_edges(n, code, deg)
    return Graph(n, edges)


def _decode_edges(n: int, code: Sequence[int], deg: list[int]) -> list[tuple[int, int]]:
    # Linear-time pointer decoding; deg holds 1 + multiplicity and is consumed.
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in code:
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_encode(g: Graph) -> list[int]:
    """Prufer code of a tree on >= 2 vertices (inverse of prufer_decode)."""
    if not is_tree(g):
        raise ValueError("Prufer codes are defined for trees only")
    n = g.n
    if n < 2:
        raise ValueError("Prufer codes need n >= 2")
    nbrs = [set(t) for t in g.neighbors]
    deg = list(g.degrees)
    code = []
    for _ in range(n - 2):
        leaf = min(v for v in range(n) if deg[v] == 1)
        parent = nbrs[leaf].pop()
        nbrs[parent].discard(leaf)
        deg[parent] -= 1
        deg[leaf] = 0
        code.append(parent)
    return code


def prufer_roundtrip(code: Sequence[int]) -> list[int]:
    """Re-encode the tree decoded from code; equals list(code) for valid input."""
    return prufer_encode(prufer_decode(code))


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All labeled trees on n vertices in lexicographic Prufer-code order.

    Yields n**(n-2) trees for n >= 2 and a single tree for n in {1, 2}.
    """
    if not 1 <= n <= TREE_ENUM_CAP:
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_ENUM_CAP}, got {n}")
    if n == 1:
        yield Graph(1, [])
        return
    for code in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(code)


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered vertex pairs in the fixed order that indexes edge bitmasks."""
    return list(itertools.combinations(range(n), 2))


def all_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled simple graphs on n vertices, ordered by edge-set bitmask.

    Bit i of the mask switches on vertex_pairs(n)[i]; masks run 0..2^C(n,2)-1.
    """
    if not 1 <= n <= GRAPH_ENUM_CAP:
        raise ValueError(f"graph enumeration supports 1 <= n <= {GRAPH_ENUM_CAP}, got {n}")
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if connected_only and not is_connected(g):
            continue
        yield g
