"""Line graph construction and the structural identities that come with it.

The line graph of G has one vertex per edge of G, with two vertices adjacent
exactly when the underlying edges share an endpoint.  Every operation here
requires a non-trivial input (each component with at least two edges): the
line graph of a single edge is an isolated vertex, which the index machinery
rejects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graphs import Edge, Graph, components, from_edge_list, is_nontrivial, is_path
from .indices import forgotten, m1, m2
from .radicals import RadicalNumber
from .report import CheckReport, exact_report

__all__ = [
    "LineGraphResult",
    "line_graph",
    "verify_degree_identity",
    "line_zagreb_identity",
    "line_regularity_characterization",
    "line_tree_characterization",
]


@dataclass(frozen=True)
class LineGraphResult:
    """The line graph plus the edge-to-vertex correspondence and basic stats."""

    graph: Graph
    edge_order: tuple[Edge, ...] = field(compare=False)

    @property
    def vertex_of_edge(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_order)}

    @property
    def stats(self) -> tuple[int, int, int, int]:
        """(max degree, min degree, vertex count, edge count) of the line graph."""
        lg = self.graph
        return (lg.max_degree, lg.min_degree, lg.n, lg.m)


def _require_nontrivial(g: Graph) -> None:
    if not is_nontrivial(g):
        raise ValueError(
            "line graph requires every component to have at least two edges "
            "(the line graph of a single edge is an isolated vertex)"
        )


@lru_cache(maxsize=512)
def line_graph(g: Graph) -> LineGraphResult:
    """Construct the line graph; vertex i corresponds to the i-th sorted edge."""
    _require_nontrivial(g)
    order = g.edges  # already sorted lexicographically
    index = {e: i for i, e in enumerate(order)}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e in order:
        u, v = e
        incident[u].append(index[e])
        incident[v].append(index[e])
    pairs: set[Edge] = set()
    for at_vertex in incident:
        for i, j in combinations(at_vertex, 2):
            pairs.add((i, j) if i < j else (j, i))
    lg = from_edge_list(len(order), sorted(pairs))
    return LineGraphResult(graph=lg, edge_order=order)


def verify_degree_identity(g: Graph) -> bool:
    """Each line-graph degree equals du+dv-2, and the degree range fits.

    Also checks max_degree(L) <= 2*max_degree(G)-2 and
    min_degree(L) >= 2*min_degree(G)-2.
    """
    result = line_graph(g)
    lg = result.graph
    for i, (u, v) in enumerate(result.edge_order):
        if lg.deg[i] != g.deg[u] + g.deg[v] - 2:
            return False
    if lg.max_degree > 2 * g.max_degree - 2:
        return False
    if lg.min_degree < 2 * g.min_degree - 2:
        return False
    return True


def line_zagreb_identity(g: Graph) -> CheckReport:
    """First Zagreb index of the line graph from indices of the base graph.

    M1(L(G)) = 4m - 4*M1(G) + 2*M2(G) + F(G), exactly, in integers.
    """
    lg = line_graph(g).graph
    lhs = m1(lg).exact
    m1g, m2g, fg = m1(g).exact, m2(g).exact, forgotten(g).exact
    assert lhs is not None and m1g is not None and m2g is not None and fg is not None
    rhs = 4 * g.m - 4 * m1g.as_fraction() + 2 * m2g.as_fraction() + fg.as_fraction()
    return exact_report(
        "line_zagreb_identity",
        "==",
        lhs,
        RadicalNumber(rhs),
        notes="M1 of the line graph vs 4m - 4*M1 + 2*M2 + F",
    )


def regular_line_condition(g: Graph) -> bool:
    """Structural condition equivalent to the line graph being regular.

    Every component regular or biregular, with the same max+min degree sum
    across components.
    """
    from .graphs import is_biregular, is_regular  # local to avoid wide import

    target = g.max_degree + g.min_degree
    for comp in components(g):
        if not (is_regular(comp) or is_biregular(comp)):
            return False
        if comp.max_degree + comp.min_degree != target:
            return False
    return True


def line_regularity_characterization(g: Graph) -> CheckReport:
    """Line graph regular iff every component is regular-or-biregular with
    constant degree sum; both directions checked by construction."""
    result = line_graph(g)
    lg = result.graph
    actual = lg.max_degree == lg.min_degree
    predicted = regular_line_condition(g)
    per_comp = ", ".join(
        f"({c.max_degree},{c.min_degree})" for c in components(g)
    )
    return exact_report(
        "line_regular_iff",
        "==",
        RadicalNumber(1 if actual else 0),
        RadicalNumber(1 if predicted else 0),
        notes=f"line graph regular: {actual}; component degree extremes: {per_comp}",
    )


def line_tree_characterization(g: Graph) -> list[CheckReport]:
    """For connected non-trivial g: line graph is a tree iff g is a path.

    Also reports the size monotonicity m <= m(L(G)) for non-paths.
    """
    if not g.is_connected:
        raise ValueError("tree characterization requires a connected graph")
    result = line_graph(g)
    lg = result.graph
    lg_is_tree = lg.is_connected and lg.m == lg.n - 1
    g_is_path = is_path(g)
    reports = [
        exact_report(
            "line_tree_iff",
            "==",
            RadicalNumber(1 if lg_is_tree else 0),
            RadicalNumber(1 if g_is_path else 0),
            notes=f"line graph tree: {lg_is_tree}; input is a path: {g_is_path}",
        )
    ]
    if not g_is_path:
        reports.append(
            exact_report(
                "line_size_monotone",
                "<=",
                RadicalNumber(g.m),
                RadicalNumber(lg.m),
                notes="edge count does not drop when passing to the line graph "
                "of a connected non-path",
            )
        )
    return reports
