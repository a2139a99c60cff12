"""Simple undirected graphs on dense integer vertices, with small-n tooling.

Graphs are immutable after construction; every operation returns a new value.
Vertex labels are always 0..n-1.  Canonical forms are exact (minimum
upper-triangle adjacency bitstring over all relabelings) and therefore decide
isomorphism, but only for small orders.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "Graph",
    "GraphKind",
    "GraphClass",
    "from_edge_list",
    "components",
    "is_nontrivial",
    "is_minimal_edge",
    "delete_edge",
    "add_edge",
    "strip_isolated",
    "classify",
    "graph_name",
    "canonical_key",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "double_star_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "paw_graph",
    "disjoint_union",
]

CANONICAL_MAX_N = 9

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph; vertices are 0..n-1, edges stored with u < v."""

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    deg: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.deg, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.deg, default=0)

    @property
    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.deg[v] == 0)

    @property
    def degree_counts(self) -> dict[int, int]:
        return dict(Counter(self.deg))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: list[Edge] | tuple[Edge, ...]) -> Graph:
    """Build a graph from (possibly repeated) vertex pairs.

    Duplicate pairs collapse to a single edge; self-loops and out-of-range
    vertices are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    edge_set: set[Edge] = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        edge_set.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(edge_set))
    neigh: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        neigh[u].append(v)
        neigh[v].append(u)
    adj = tuple(tuple(sorted(ns)) for ns in neigh)
    deg = tuple(len(ns) for ns in adj)
    if sum(deg) != 2 * len(edges):
        raise AssertionError("handshake identity violated")
    return Graph(n=n, edges=edges, adj=adj, deg=deg)


def components(g: Graph) -> list[Graph]:
    """Connected components as standalone graphs (vertices relabeled in order).

    Isolated vertices come back as single-vertex components, so callers can
    reject edgeless pieces explicitly.
    """
    seen = [False] * g.n
    out: list[Graph] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            for w in g.adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(induced_subgraph(g, comp))
    return out


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    keep = set(vertices)
    pairs = [
        (index[u], index[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return from_edge_list(len(vertices), pairs)


def strip_isolated(g: Graph) -> Graph:
    """Drop degree-0 vertices, relabeling the rest in ascending order."""
    kept = [v for v in range(g.n) if g.deg[v] > 0]
    return induced_subgraph(g, kept)


def is_nontrivial(g: Graph) -> bool:
    """True when every connected component has at least two edges."""
    return all(c.m >= 2 for c in components(g))


def _norm_edge(e: Edge) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def is_minimal_edge(g: Graph, e: Edge) -> bool:
    """An edge both of whose endpoint degrees are minimal in their neighborhoods.

    Formally ``uv`` with ``deg(u) <= deg(w)`` for every other neighbor ``w`` of
    ``u`` and symmetrically for ``v``; either condition may hold vacuously.
    """
    u, v = _norm_edge(e)
    if (u, v) not in g._edge_set():
        raise ValueError(f"edge ({u}, {v}) not in graph")
    for a, b in ((u, v), (v, u)):
        for w in g.adj[a]:
            if w != b and g.deg[a] > g.deg[w]:
                return False
    return True


def delete_edge(g: Graph, e: Edge) -> Graph:
    """Remove one edge, keeping the vertex set (isolated vertices remain)."""
    u, v = _norm_edge(e)
    if (u, v) not in g._edge_set():
        raise ValueError(f"edge ({u}, {v}) not in graph")
    return from_edge_list(g.n, [p for p in g.edges if p != (u, v)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return from_edge_list(g.n, list(g.edges) + [(u, v)])


# -- structural classification -------------------------------------------


class GraphKind(Enum):
    REGULAR = "regular"
    BIREGULAR = "biregular"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    DOUBLE_STAR = "double_star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    OTHER = "other"


@dataclass(frozen=True)
class GraphClass:
    kind: GraphKind
    params: tuple[int, ...]
    degree_class_counts: dict[int, int] = field(compare=False)

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.kind.value}({inner})" if inner else self.kind.value


def is_regular(g: Graph) -> bool:
    return g.n > 0 and g.max_degree == g.min_degree


def is_biregular(g: Graph) -> bool:
    """Exactly two vertex degrees with every edge joining one of each.

    This is the bipartition-free reading of a (max,min)-biregular graph; it
    coincides with the bipartite definition whenever there are no isolated
    vertices, and stays well defined for disconnected graphs.
    """
    degrees = set(g.deg)
    if len(degrees) != 2:
        return False
    hi, lo = max(degrees), min(degrees)
    return all({g.deg[u], g.deg[v]} == {hi, lo} for u, v in g.edges)


def is_path(g: Graph) -> bool:
    return g.n >= 2 and g.is_connected and g.m == g.n - 1 and g.max_degree <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected and all(d == 2 for d in g.deg)


def is_star(g: Graph) -> bool:
    """Star on n >= 2 vertices (a single edge counts: it is the 2-vertex star)."""
    return g.n >= 2 and g.is_connected and g.m == g.n - 1 and g.max_degree == g.n - 1


def is_double_star(g: Graph) -> bool:
    """Tree with exactly two adjacent non-leaf vertices (each with >= 1 leaf)."""
    if not (g.n >= 4 and g.is_connected and g.m == g.n - 1):
        return False
    centers = [v for v in range(g.n) if g.deg[v] >= 2]
    return len(centers) == 2 and g.has_edge(centers[0], centers[1])


def _bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    color = [-1] * g.n
    sides: tuple[list[int], list[int]] = ([], [])
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        sides[0].append(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    sides[color[w]].append(w)
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return sides


def is_complete_bipartite(g: Graph) -> bool:
    if g.n < 2 or not g.is_connected:
        return False
    sides = _bipartition(g)
    return sides is not None and g.m == len(sides[0]) * len(sides[1])


def classify(g: Graph) -> GraphClass:
    """Most specific structural class, for reporting.

    Named shapes win over the generic regular/biregular kinds, except that a
    regular graph is never reported as complete bipartite.  Predicates such as
    :func:`is_regular` / :func:`is_biregular` are exposed independently, so
    nothing downstream depends on this precedence.  Disconnected graphs get
    ``OTHER`` (component classes are available via :func:`components`).
    """
    counts = dict(Counter(g.deg))
    if not g.is_connected or g.n < 2:
        return GraphClass(GraphKind.OTHER, (), counts)
    if is_path(g):
        return GraphClass(GraphKind.PATH, (g.n,), counts)
    if is_cycle(g):
        return GraphClass(GraphKind.CYCLE, (g.n,), counts)
    if is_star(g):
        return GraphClass(GraphKind.STAR, (g.n,), counts)
    if is_double_star(g):
        centers = sorted(d - 1 for d in g.deg if d >= 2)
        return GraphClass(GraphKind.DOUBLE_STAR, tuple(centers), counts)
    if is_regular(g):
        return GraphClass(GraphKind.REGULAR, (g.max_degree,), counts)
    if is_complete_bipartite(g):
        sides = _bipartition(g)
        assert sides is not None
        p, q = sorted((len(sides[0]), len(sides[1])))
        return GraphClass(GraphKind.COMPLETE_BIPARTITE, (p, q), counts)
    if is_biregular(g):
        return GraphClass(GraphKind.BIREGULAR, (g.max_degree, g.min_degree), counts)
    return GraphClass(GraphKind.OTHER, (), counts)


def graph_name(g: Graph) -> str | None:
    """Conventional name (P5, C4, S5, DS1,2, K2,3, K4, paw) if recognized."""
    cls = classify(g)
    if cls.kind is GraphKind.PATH:
        return f"P{g.n}"
    if cls.kind is GraphKind.CYCLE:
        return f"C{g.n}"
    if cls.kind is GraphKind.STAR:
        return f"S{g.n}"
    if cls.kind is GraphKind.DOUBLE_STAR:
        a, b = cls.params
        return f"DS{a},{b}"
    if cls.kind is GraphKind.COMPLETE_BIPARTITE:
        p, q = cls.params
        return f"K{p},{q}"
    if cls.kind is GraphKind.REGULAR:
        if g.m == g.n * (g.n - 1) // 2:
            return f"K{g.n}"
        if is_complete_bipartite(g):
            half = g.n // 2
            return f"K{half},{half}"
        return None
    if g.n == 4 and g.m == 4 and sorted(g.deg) == [1, 2, 2, 3]:
        return "paw"
    return None


# -- canonical forms -------------------------------------------------------


def canonical_key(g: Graph, max_n: int = CANONICAL_MAX_N) -> tuple[int, ...]:
    """Minimum column-major upper-triangle encoding over all relabelings.

    Entry ``k-1`` packs the adjacency bits between position ``k`` and positions
    ``0..k-1`` (earlier position = more significant bit).  Minimizing this
    tuple lexicographically is exact, so equal keys mean isomorphic graphs.
    """
    n = g.n
    if n > max_n:
        raise ValueError(
            f"canonical form is exhaustive and limited to n <= {max_n}; got n={n}"
        )
    if n <= 1:
        return ()
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if not g.edges:
        return (0,) * (n - 1)
    if g.m == n * (n - 1) // 2:
        return tuple((1 << k) - 1 for k in range(1, n))

    def best_suffix(chosen: list[int], remaining: list[int]) -> list[int]:
        if not remaining:
            return []
        k = len(chosen)
        scored: list[tuple[int, int]] = []
        for v in remaining:
            mv = masks[v]
            col = 0
            for j, u in enumerate(chosen):
                if (mv >> u) & 1:
                    col |= 1 << (k - 1 - j)
            scored.append((col, v))
        cmin = min(c for c, _ in scored)
        best: list[int] | None = None
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for col, v in scored:
            if col != cmin:
                continue
            # Twins (same open or closed neighborhood) are interchangeable by
            # an automorphism fixing everything else; explore one of each.
            sig_open = masks[v]
            sig_closed = masks[v] | (1 << v)
            if sig_open in seen_open or sig_closed in seen_closed:
                continue
            seen_open.add(sig_open)
            seen_closed.add(sig_closed)
            chosen.append(v)
            rest = [w for w in remaining if w != v]
            suffix = best_suffix(chosen, rest)
            chosen.pop()
            if best is None or suffix < best:
                best = suffix
        assert best is not None
        return [cmin] + best

    cols = best_suffix([], list(range(n)))
    return tuple(cols[1:])  # position 0 contributes no bits


def canonical_form(g: Graph, max_n: int = CANONICAL_MAX_N) -> str:
    """Canonical key rendered as a bitstring, prefixed by the order."""
    key = canonical_key(g, max_n=max_n)
    bits = "".join(format(col, f"0{k}b") for k, col in enumerate(key, start=1))
    return f"{g.n}:{bits}"


def canonical_graph(g: Graph, max_n: int = CANONICAL_MAX_N) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    key = canonical_key(g, max_n=max_n)
    pairs = []
    for k, col in enumerate(key, start=1):
        for j in range(k):
            if (col >> (k - 1 - j)) & 1:
                pairs.append((j, k))
    return from_edge_list(g.n, pairs)


def is_isomorphic(g: Graph, h: Graph, max_n: int = CANONICAL_MAX_N) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_key(g, max_n=max_n) == canonical_key(h, max_n=max_n)


# -- named families ---------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices: center 0 joined to the other n-1 vertices."""
    if n < 2:
        raise ValueError("a star needs at least two vertices")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def double_star_graph(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 carrying ``a`` and ``b`` pendant leaves."""
    if a < 0 or b < 0:
        raise ValueError("leaf counts must be nonnegative")
    pairs: list[Edge] = [(0, 1)]
    nxt = 2
    for _ in range(a):
        pairs.append((0, nxt))
        nxt += 1
    for _ in range(b):
        pairs.append((1, nxt))
        nxt += 1
    return from_edge_list(nxt, pairs)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("both sides need at least one vertex")
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def paw_graph() -> Graph:
    """Triangle with one pendant edge."""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def disjoint_union(*graphs: Graph) -> Graph:
    pairs: list[Edge] = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return from_edge_list(offset, pairs)
