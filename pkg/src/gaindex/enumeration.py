"""Isomorph-free generation of small connected graphs and extremal sweeps.

Generation is exact: one canonical representative per isomorphism class.
Labeled brute force is used through n=5; larger orders grow trees by leaf
attachment and then add edges level by level, deduplicating with canonical
forms (every connected graph contains a spanning tree, so edge augmentation
reaches everything).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graphs import (
    Graph,
    GraphKind,
    add_edge,
    canonical_key,
    canonical_form,
    classify,
    complete_bipartite_graph,
    cycle_graph,
    double_star_graph,
    from_edge_list,
    graph_name,
    is_biregular,
    is_nontrivial,
    is_regular,
    path_graph,
    paw_graph,
    star_graph,
)
from .indices import IndexValue, ga1
from .linegraph import line_graph
from .radicals import RadicalNumber, compare
from .report import CheckReport, exact_report

__all__ = [
    "ENUMERATION_MAX_N",
    "Bucket",
    "BucketMember",
    "enumerate_connected",
    "enumerate_trees",
    "connected_with_edges",
    "connected_nontrivial",
    "classify_small_values",
    "classify_line_small_values",
    "expected_small_value_families",
    "expected_line_small_value_families",
    "buckets_match_families",
    "line_graph_preimages",
    "verify_no_preimage",
    "check_double_star_rational",
    "check_complete_bipartite_integer",
    "extremal_search",
    "random_connected",
    "census_rows",
]

ENUMERATION_MAX_N = 8


def _graph_from_key(n: int, key: tuple[int, ...]) -> Graph:
    pairs = []
    for k, col in enumerate(key, start=1):
        for j in range(k):
            if (col >> (k - 1 - j)) & 1:
                pairs.append((j, k))
    return from_edge_list(n, pairs)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return (from_edge_list(1, []),)
    out: dict[tuple[int, ...], None] = {}
    for tree in enumerate_trees(n - 1):
        for v in range(n - 1):
            grown = add_edge(
                from_edge_list(n, tree.edges), v, n - 1
            )
            out.setdefault(canonical_key(grown), None)
    return tuple(_graph_from_key(n, key) for key in sorted(out))


def enumerate_connected(n: int, max_n: int = 7) -> tuple[Graph, ...]:
    """One canonical representative per connected graph on n vertices.

    Exhaustive and exact; bounded because canonical forms are brute force.
    Orders up to 7 are the supported default; 8 works but takes minutes.
    """
    limit = min(max_n, ENUMERATION_MAX_N)
    if not 1 <= n <= limit:
        raise ValueError(
            f"enumeration supports 1 <= n <= {limit} "
            f"(n=8 available by passing max_n=8; beyond that is out of reach)"
        )
    return _connected_classes(n)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n <= 5:
        found: dict[tuple[int, ...], None] = {}
        all_pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(all_pairs)):
            pairs = [all_pairs[i] for i in range(len(all_pairs)) if (mask >> i) & 1]
            g = from_edge_list(n, pairs)
            if g.is_connected:
                found.setdefault(canonical_key(g), None)
        reps = [_graph_from_key(n, key) for key in sorted(found)]
        return tuple(sorted(reps, key=lambda g: (g.m, canonical_key(g))))

    level: dict[tuple[int, ...], Graph] = {}
    for tree in enumerate_trees(n):
        level[canonical_key(tree)] = tree
    collected: list[Graph] = list(level.values())
    while level:
        nxt: dict[tuple[int, ...], Graph] = {}
        for g in level.values():
            present = set(g.edges)
            for u, v in combinations(range(n), 2):
                if (u, v) in present:
                    continue
                grown = add_edge(g, u, v)
                key = canonical_key(grown)
                if key not in nxt:
                    nxt[key] = _graph_from_key(n, key)
        collected.extend(nxt.values())
        level = nxt
    return tuple(sorted(collected, key=lambda g: (g.m, canonical_key(g))))


def connected_with_edges(n_max: int) -> list[Graph]:
    """All connected graphs with at least one edge and order up to n_max."""
    out: list[Graph] = []
    for n in range(2, n_max + 1):
        out.extend(g for g in enumerate_connected(n, max_n=max(n_max, 7)))
    return out


def connected_nontrivial(n_max: int) -> list[Graph]:
    """All connected graphs with at least two edges and order up to n_max."""
    return [g for g in connected_with_edges(n_max) if g.m >= 2]


# -- small-value classification ----------------------------------------------


@dataclass(frozen=True)
class BucketMember:
    canonical: str
    graph: Graph
    value: RadicalNumber
    name: str | None


@dataclass(frozen=True)
class Bucket:
    """Graphs whose index value lies in the half-open interval (lower, upper]."""

    lower: int
    upper: int
    members: tuple[BucketMember, ...]


_BUCKET_RANGES = ((0, 1), (1, 2), (2, 3), (3, 4))


def _bucketize(pairs: list[tuple[Graph, RadicalNumber]]) -> list[Bucket]:
    filled: dict[tuple[int, int], list[BucketMember]] = {r: [] for r in _BUCKET_RANGES}
    for g, value in pairs:
        for lo, hi in _BUCKET_RANGES:
            if compare(value, lo) > 0 and compare(value, hi) <= 0:
                filled[(lo, hi)].append(
                    BucketMember(
                        canonical=canonical_form(g),
                        graph=g,
                        value=value,
                        name=graph_name(g),
                    )
                )
                break
    return [
        Bucket(lo, hi, tuple(sorted(filled[(lo, hi)], key=lambda m: m.canonical)))
        for lo, hi in _BUCKET_RANGES
    ]


def classify_small_values(n_max: int) -> list[Bucket]:
    """Bucket every connected graph (with an edge, n <= n_max) by exact GA1.

    The (3,4] bucket is complete only once all orders up to 6 are present,
    hence the precondition.
    """
    if n_max < 6:
        raise ValueError("n_max >= 6 is required to fill the (3,4] bucket")
    pairs = []
    for g in connected_with_edges(n_max):
        value = ga1(g).exact
        assert value is not None
        pairs.append((g, value))
    return _bucketize(pairs)


def classify_line_small_values(n_max: int) -> list[Bucket]:
    """Bucket non-trivial connected graphs by the exact GA1 of their line graph.

    A line-graph value of at most 4 forces at most 6 edges, hence at most 7
    vertices in the source graph: n_max >= 7 sees every member.
    """
    if n_max < 7:
        raise ValueError("n_max >= 7 is required to cover every possible member")
    pairs = []
    for g in connected_nontrivial(n_max):
        value = ga1(line_graph(g).graph).exact
        assert value is not None
        pairs.append((g, value))
    return _bucketize(pairs)


def expected_small_value_families() -> dict[tuple[int, int], list[Graph]]:
    """The known classification of GA1 values up to 4, by membership."""
    return {
        (0, 1): [path_graph(2)],
        (1, 2): [path_graph(3)],
        (2, 3): [cycle_graph(3), path_graph(4), star_graph(4)],
        (3, 4): [
            star_graph(6),
            star_graph(5),
            path_graph(5),
            double_star_graph(1, 2),
            cycle_graph(4),
            paw_graph(),
        ],
    }


def expected_line_small_value_families() -> dict[tuple[int, int], list[Graph]]:
    """The known classification of line-graph GA1 values up to 4 (source graphs)."""
    return {
        (0, 1): [path_graph(3)],
        (1, 2): [path_graph(4)],
        (2, 3): [cycle_graph(3), star_graph(4), path_graph(5)],
        (3, 4): [path_graph(6), cycle_graph(4), double_star_graph(1, 2)],
    }


def buckets_match_families(
    buckets: list[Bucket], families: dict[tuple[int, int], list[Graph]]
) -> bool:
    """Same isomorphism classes in every bucket."""
    for bucket in buckets:
        expected = families.get((bucket.lower, bucket.upper), [])
        got = sorted(member.canonical for member in bucket.members)
        want = sorted(canonical_form(g) for g in expected)
        if got != want:
            return False
    return True


# -- line-graph preimages ------------------------------------------------------


def line_graph_preimages(target: Graph, n_max: int | None = None) -> list[Graph]:
    """All connected non-trivial graphs whose line graph is the target.

    A preimage must have exactly as many edges as the target has vertices,
    which bounds its order by that count plus one; the search is exhaustive.
    """
    if target.n > 6:
        raise ValueError("preimage search is supported for targets with n <= 6")
    m_needed = target.n
    bound = m_needed + 1 if n_max is None else min(n_max, m_needed + 1)
    target_key = canonical_key(target)
    out = []
    for n in range(2, bound + 1):
        for g in enumerate_connected(n, max_n=max(bound, 7)):
            if g.m != m_needed or not is_nontrivial(g):
                continue
            if canonical_key(line_graph(g).graph) == target_key:
                out.append(g)
    return out


def verify_no_preimage(target: Graph, n_max: int | None = None) -> bool:
    return not line_graph_preimages(target, n_max=n_max)


# -- worked families ------------------------------------------------------------


def check_double_star_rational(n1: int, n2: int) -> CheckReport:
    """Double star on leaf counts n1^2-1 and n2^2-1: rational GA1, not biregular.

    Verifies the closed form
    2(n1^2-1)n1/(n1^2+1) + 2(n2^2-1)n2/(n2^2+1) + 2*n1*n2/(n1^2+n2^2) exactly.
    """
    check_id = "double_star_rational"
    if n1 < 1 or n2 < 1:
        raise ValueError("both parameters must be positive integers")
    if n1 == n2:
        raise ValueError("parameters must be different")
    a, b = n1 * n1 - 1, n2 * n2 - 1
    g = double_star_graph(a, b)
    value = ga1(g).exact
    assert value is not None
    closed = RadicalNumber(
        Fraction(2 * (n1 * n1 - 1) * n1, n1 * n1 + 1)
        + Fraction(2 * (n2 * n2 - 1) * n2, n2 * n2 + 1)
        + Fraction(2 * n1 * n2, n1 * n1 + n2 * n2)
    )
    degenerate = min(a, b) == 0
    notes = (
        f"rational: {value.is_rational}; biregular: {is_biregular(g)}"
        + ("; degenerate: a center has no leaves (graph is a star)" if degenerate else "")
    )
    report = exact_report(check_id, "==", value, closed, notes=notes)
    report.holds = (
        report.equality and value.is_rational and (degenerate or not is_biregular(g))
    )
    if degenerate:
        report.preconditions_met = False
    return report


def check_complete_bipartite_integer(k: int, size_guard: int = 40) -> CheckReport:
    """K(5k,20k): GA1 is exactly the integer 80*k^2 although the graph is
    not regular."""
    check_id = "complete_bipartite_integer"
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > size_guard:
        raise ValueError(f"k={k} exceeds the size guard {size_guard}")
    g = complete_bipartite_graph(5 * k, 20 * k)
    value = ga1(g).exact
    assert value is not None
    kind = classify(g).kind
    notes = (
        f"integer: {value.is_integer}; classified: {kind.value}; "
        f"regular: {is_regular(g)}"
    )
    report = exact_report(check_id, "==", value, RadicalNumber(80 * k * k), notes=notes)
    report.holds = (
        report.equality
        and value.is_integer
        and kind is GraphKind.COMPLETE_BIPARTITE
        and not is_regular(g)
    )
    return report


# -- extremal search -------------------------------------------------------------


def extremal_search(
    n: int, m: int, objective: str
) -> list[tuple[Graph, RadicalNumber]]:
    """Exhaustive optimum of GA1 over connected graphs with given (n, m).

    Returns every optimal graph (exact ties included) with its exact value.
    """
    if objective not in ("min", "max"):
        raise ValueError("objective must be 'min' or 'max'")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"no connected graph has n={n}, m={m}")
    candidates = [g for g in enumerate_connected(n) if g.m == m]
    if not candidates:
        raise ValueError(f"no connected graph has n={n}, m={m}")
    values = []
    for g in candidates:
        value = ga1(g).exact
        assert value is not None
        values.append((g, value))
    best = values[0][1]
    for _, value in values[1:]:
        cmp = compare(value, best)
        if (objective == "min" and cmp < 0) or (objective == "max" and cmp > 0):
            best = value
    return [(g, value) for g, value in values if compare(value, best) == 0]


# -- random generation ------------------------------------------------------------


def random_connected(
    rng: random.Random, n_low: int = 3, n_high: int = 12
) -> Graph:
    """Seeded random connected graph via edge probability, retried until
    connected (with a spanning-tree fallback so it always terminates)."""
    n = rng.randint(n_low, n_high)
    p = rng.uniform(0.25, 0.75)
    for _ in range(100):
        pairs = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = from_edge_list(n, pairs)
        if g.is_connected:
            return g
    pairs = [(rng.randrange(i), i) for i in range(1, n)]
    extra = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(n, pairs + extra)


# -- census -----------------------------------------------------------------------


def census_rows(n: int) -> list[dict[str, object]]:
    """Per-class census rows for order n, ready for CSV output."""
    rows = []
    for g in enumerate_connected(n):
        if g.m == 0:
            rows.append(
                {
                    "canonical_form": canonical_form(g),
                    "name": graph_name(g) or "",
                    "n": g.n,
                    "m": g.m,
                    "ga1_exact": "",
                    "ga1_float": "",
                }
            )
            continue
        value: IndexValue = ga1(g)
        assert value.exact is not None
        rows.append(
            {
                "canonical_form": canonical_form(g),
                "name": graph_name(g) or "",
                "n": g.n,
                "m": g.m,
                "ga1_exact": str(value.exact),
                "ga1_float": repr(value.approx),
            }
        )
    return rows
