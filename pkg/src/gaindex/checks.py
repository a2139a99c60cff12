"""One checker per inequality/identity, each returning verdict reports.

Checkers validate their own hypotheses (reported as ``preconditions_met``
rather than raised), decide exactly whenever both sides live in the radical
span, and never mutate or share state: each builds its own line graph.
Quotient bounds are decided exactly by cross-multiplication, so equality
characterizations never depend on floating point.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .graphs import (
    Graph,
    components,
    delete_edge,
    is_biregular,
    is_minimal_edge,
    is_nontrivial,
    is_path,
    is_regular,
    is_star,
    strip_isolated,
)
from .indices import IndexValue, chi_alpha, ga1, m1, m1_alpha, m2
from .linegraph import (
    line_graph,
    line_regularity_characterization,
    line_tree_characterization,
    line_zagreb_identity,
    regular_line_condition,
)
from .radicals import RadicalNumber, compare, radical_sqrt
from .report import CheckReport, exact_report, float_report, skipped_report

__all__ = [
    "ga_edge_term",
    "ga_ratio_curve",
    "check_extreme_degree_bounds",
    "check_order_size_bounds",
    "check_star_lower_bound",
    "check_no_universal_vertex_bound",
    "check_edge_deletion_drop",
    "check_rationality",
    "check_line_ga_bounds",
    "check_nordhaus_gaddum",
    "check_line_ga_ratio_bound",
    "check_line_vs_graph_regular",
    "check_line_order_bound",
    "check_line_sqrt_bound",
    "check_line_zagreb_lower",
    "check_variable_zagreb_bound",
    "check_line_variable_zagreb_bound",
    "check_three_half_zagreb_bound",
    "check_line_three_half_zagreb_bound",
    "check_term_shift_inequality",
    "check_sqrt_shift_superadditivity",
    "CHECK_IDS",
    "DEFAULT_ALPHAS",
    "run_checks",
]

DEFAULT_ALPHAS: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1), Fraction(2))

Rational = int | Fraction


# -- helper functions behind most of the bounds ----------------------------


def ga_ratio_curve(t: Rational) -> Fraction:
    """2t/(1+t^2): increases on [0,1], decreases on [1,inf), peaks at t=1."""
    frac = Fraction(t)
    if frac < 0:
        raise ValueError("defined for t >= 0")
    return 2 * frac / (1 + frac * frac)


def ga_edge_term(x: Rational, y: Rational) -> RadicalNumber:
    """2*sqrt(xy)/(x+y), the per-edge term of the geometric-arithmetic index."""
    fx, fy = Fraction(x), Fraction(y)
    if fx <= 0 or fy <= 0:
        raise ValueError("defined for positive arguments")
    return RadicalNumber.sqrt_fraction(fx * fy) * Fraction(2, 1) / (fx + fy)


def _sqrt_scaled(radicand: int, coeff: Fraction) -> RadicalNumber:
    """coeff * sqrt(radicand), tolerating radicand == 0."""
    if radicand == 0 or coeff == 0:
        return RadicalNumber(0)
    return RadicalNumber.sqrt_int(radicand) * coeff


def _edge_ready(g: Graph) -> str | None:
    if g.n == 0 or g.m == 0:
        return "graph has no edges"
    if g.isolated_vertices:
        return "every component must contain an edge (isolated vertices present)"
    return None


def _nontrivial_ready(g: Graph) -> str | None:
    reason = _edge_ready(g)
    if reason:
        return reason
    if not is_nontrivial(g):
        return "every component must have at least two edges"
    return None


def _ga(g: Graph) -> RadicalNumber:
    value = ga1(g).exact
    assert value is not None
    return value


def _int_index(value: IndexValue) -> Fraction:
    assert value.exact is not None
    return value.exact.as_fraction()


# -- checkers over the base graph ------------------------------------------


def check_extreme_degree_bounds(g: Graph) -> list[CheckReport]:
    """2m*sqrt(Dd)/(D+d) <= GA1 <= m; lower tight iff regular or biregular,
    upper tight iff regular."""
    reason = _edge_ready(g)
    if reason:
        return [
            skipped_report("extreme_degree_bounds.lower", "<=", reason),
            skipped_report("extreme_degree_bounds.upper", "<=", reason),
        ]
    ga = _ga(g)
    big, small = g.max_degree, g.min_degree
    lower = _sqrt_scaled(big * small, Fraction(2 * g.m, big + small))
    return [
        exact_report(
            "extreme_degree_bounds.lower",
            "<=",
            lower,
            ga,
            predicted_equality=is_regular(g) or is_biregular(g),
        ),
        exact_report(
            "extreme_degree_bounds.upper",
            "<=",
            ga,
            RadicalNumber(g.m),
            predicted_equality=is_regular(g),
        ),
    ]


def check_order_size_bounds(g: Graph) -> list[CheckReport]:
    """GA1 >= 2(n-1)^(3/2)/n and GA1 >= 2m/n, for connected graphs."""
    reason = _edge_ready(g)
    if reason is None and not g.is_connected:
        reason = "requires a connected graph"
    if reason:
        return [
            skipped_report("order_size_bounds.order", ">=", reason),
            skipped_report("order_size_bounds.size", ">=", reason),
        ]
    ga = _ga(g)
    n = g.n
    return [
        exact_report(
            "order_size_bounds.order",
            ">=",
            ga,
            _sqrt_scaled(n - 1, Fraction(2 * (n - 1), n)),
        ),
        exact_report(
            "order_size_bounds.size",
            ">=",
            ga,
            RadicalNumber(Fraction(2 * g.m, n)),
        ),
    ]


def check_star_lower_bound(g: Graph) -> list[CheckReport]:
    """GA1 >= 2m*sqrt(n-1)/n, tight exactly for stars."""
    reason = _edge_ready(g)
    if reason:
        return [skipped_report("star_lower_bound", ">=", reason)]
    ga = _ga(g)
    bound = _sqrt_scaled(g.n - 1, Fraction(2 * g.m, g.n))
    return [
        exact_report(
            "star_lower_bound", ">=", ga, bound, predicted_equality=is_star(g)
        )
    ]


def check_no_universal_vertex_bound(g: Graph) -> list[CheckReport]:
    """With max degree <= n-2: GA1 > 2m*sqrt(n-2)/(n-1), and that bound is
    itself >= 2*sqrt(n-2) once m >= n-1."""
    reason = _edge_ready(g)
    if reason is None and g.max_degree > g.n - 2:
        reason = f"needs max degree <= n-2 (have {g.max_degree} on n={g.n})"
    if reason:
        return [
            skipped_report("no_universal_vertex_bound.strict", ">", reason),
            skipped_report("no_universal_vertex_bound.tail", ">=", reason),
        ]
    ga = _ga(g)
    bound = _sqrt_scaled(g.n - 2, Fraction(2 * g.m, g.n - 1))
    out = [exact_report("no_universal_vertex_bound.strict", ">", ga, bound)]
    if g.m >= g.n - 1:
        out.append(
            exact_report(
                "no_universal_vertex_bound.tail",
                ">=",
                bound,
                _sqrt_scaled(g.n - 2, Fraction(2)),
            )
        )
    else:
        out.append(
            skipped_report(
                "no_universal_vertex_bound.tail",
                ">=",
                "tail comparison needs m >= n-1 (true for connected graphs)",
            )
        )
    return out


def check_edge_deletion_drop(g: Graph) -> list[CheckReport]:
    """Deleting a minimal edge drops GA1 by strictly more than the edge's term.

    A minimal edge that is its own component is excluded: deletion then
    removes exactly its term and the strict drop fails, so the statement
    implicitly needs a surviving edge next to the deleted one.
    """
    reason = _edge_ready(g)
    if reason:
        return [skipped_report("edge_deletion_drop", "<", reason)]
    # Edge count of each vertex's component, to spot single-edge components.
    comp_m_of_vertex = [0] * g.n
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        verts = [start]
        while stack:
            for w in g.adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    verts.append(w)
                    stack.append(w)
        vset = set(verts)
        m_comp = sum(1 for u, v in g.edges if u in vset and v in vset)
        for v in verts:
            comp_m_of_vertex[v] = m_comp
    ga = _ga(g)
    out: list[CheckReport] = []
    for e in g.edges:
        if not is_minimal_edge(g, e):
            continue
        u, v = e
        if comp_m_of_vertex[u] < 2:
            out.append(
                skipped_report(
                    "edge_deletion_drop",
                    "<",
                    f"edge ({u},{v}) is a single-edge component; deletion leaves "
                    "exact equality, the strict drop needs an adjacent edge",
                )
            )
            continue
        term = _sqrt_scaled(g.deg[u] * g.deg[v], Fraction(2, g.deg[u] + g.deg[v]))
        remaining = strip_isolated(delete_edge(g, e))
        out.append(
            exact_report(
                "edge_deletion_drop",
                "<",
                _ga(remaining),
                ga - term,
                notes=f"deleted minimal edge ({u},{v})",
            )
        )
    if not out:
        out.append(skipped_report("edge_deletion_drop", "<", "no minimal edge"))
    return out


def check_rationality(g: Graph) -> list[CheckReport]:
    """GA1 is rational exactly when every edge's degree product is a square."""
    reason = _edge_ready(g)
    if reason:
        return [skipped_report("rationality", "==", reason)]
    ga = _ga(g)
    value_rational = ga.is_rational
    all_square = all(
        radical_sqrt(g.deg[u] * g.deg[v])[1] == 1 for u, v in g.edges
    )
    report = exact_report(
        "rationality",
        "==",
        ga,
        RadicalNumber(ga.rational_part),
        predicted_equality=all_square,
        notes=f"value rational: {value_rational}; "
        f"every degree product a perfect square: {all_square}",
    )
    # The statement under test is the equivalence itself.
    report.holds = report.characterization_consistent is True
    return [report]


# -- checkers involving the line graph --------------------------------------


def check_line_ga_bounds(g: Graph) -> list[CheckReport]:
    """(M1-2m)*sqrt((D-1)(d-1))/(D+d-2) <= GA1(L(G)) <= M1/2 - m."""
    reason = _nontrivial_ready(g)
    if reason:
        return [
            skipped_report("line_ga_bounds.lower", "<=", reason),
            skipped_report("line_ga_bounds.upper", "<=", reason),
        ]
    lg = line_graph(g).graph
    gl = _ga(lg)
    m1g = _int_index(m1(g))
    big, small = g.max_degree, g.min_degree
    radicand = (big - 1) * (small - 1)
    lower = _sqrt_scaled(radicand, Fraction(int(m1g) - 2 * g.m, big + small - 2))
    notes_lower = "vacuous: bound is zero (min degree 1)" if radicand == 0 else ""
    return [
        exact_report(
            "line_ga_bounds.lower",
            "<=",
            lower,
            gl,
            predicted_equality=is_regular(g),
            notes=notes_lower,
        ),
        exact_report(
            "line_ga_bounds.upper",
            "<=",
            gl,
            RadicalNumber(m1g / 2 - g.m),
            predicted_equality=regular_line_condition(g),
            notes="upper bound tight exactly when the line graph is regular",
        ),
    ]


def check_nordhaus_gaddum(g: Graph) -> list[CheckReport]:
    """M1*sqrt((D-1)(d-1))/(D+d-2) <= GA1(G)+GA1(L(G)) <= M1/2; tight iff regular."""
    reason = _nontrivial_ready(g)
    if reason:
        return [
            skipped_report("nordhaus_gaddum.lower", "<=", reason),
            skipped_report("nordhaus_gaddum.upper", "<=", reason),
        ]
    lg = line_graph(g).graph
    total = _ga(g) + _ga(lg)
    m1g = _int_index(m1(g))
    big, small = g.max_degree, g.min_degree
    lower = _sqrt_scaled((big - 1) * (small - 1), m1g / (big + small - 2))
    regular = is_regular(g)
    return [
        exact_report(
            "nordhaus_gaddum.lower", "<=", lower, total, predicted_equality=regular
        ),
        exact_report(
            "nordhaus_gaddum.upper",
            "<=",
            total,
            RadicalNumber(m1g / 2),
            predicted_equality=regular,
        ),
    ]


def check_line_ga_ratio_bound(g: Graph) -> list[CheckReport]:
    """GA1(L(G)) >= min(3/(4*sqrt(2)), term(2D-2, max(2d-2,1))) * GA1(G)."""
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report("line_ga_ratio_bound", ">=", reason)]
    lg = line_graph(g).graph
    hi = 2 * g.max_degree - 2
    lo = max(2 * g.min_degree - 2, 1)
    candidate = _sqrt_scaled(hi * lo, Fraction(2, hi + lo))
    path_factor = RadicalNumber({2: Fraction(3, 8)})  # 3/(4*sqrt(2))
    factor = path_factor if compare(path_factor, candidate) <= 0 else candidate
    rhs = factor * _ga(g)
    return [
        exact_report(
            "line_ga_ratio_bound",
            ">=",
            _ga(lg),
            rhs,
            notes="tight for the 3-vertex path",
        )
    ]


def check_line_vs_graph_regular(g: Graph) -> list[CheckReport]:
    """GA1(L(G)) >= GA1(G) when every component is regular or biregular and
    none is the 3-vertex path."""
    reason = _nontrivial_ready(g)
    if reason is None:
        comps = components(g)
        if any(c.n == 3 and is_path(c) for c in comps):
            reason = "a component is the 3-vertex path"
        elif not all(is_regular(c) or is_biregular(c) for c in comps):
            reason = "every component must be regular or biregular"
    if reason:
        return [skipped_report("line_vs_graph_regular", ">=", reason)]
    lg = line_graph(g).graph
    return [
        exact_report(
            "line_vs_graph_regular",
            ">=",
            _ga(lg),
            _ga(g),
            notes="tight for disjoint unions of cycles",
        )
    ]


def check_line_order_bound(g: Graph) -> list[CheckReport]:
    """GA1(L(G)) >= 2(m-1)^(3/2)/m."""
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report("line_order_bound", ">=", reason)]
    lg = line_graph(g).graph
    bound = _sqrt_scaled(g.m - 1, Fraction(2 * (g.m - 1), g.m))
    return [exact_report("line_order_bound", ">=", _ga(lg), bound)]


def check_line_sqrt_bound(g: Graph) -> list[CheckReport]:
    """GA1(L(G)) >= 2*sqrt(m-1) when no component is a path on <= 6 vertices."""
    reason = _nontrivial_ready(g)
    if reason is None and any(
        is_path(c) and c.n <= 6 for c in components(g)
    ):
        reason = "a component is a path on at most 6 vertices"
    if reason:
        return [skipped_report("line_sqrt_bound", ">=", reason)]
    lg = line_graph(g).graph
    return [
        exact_report(
            "line_sqrt_bound", ">=", _ga(lg), _sqrt_scaled(g.m - 1, Fraction(2))
        )
    ]


def check_line_zagreb_lower(g: Graph) -> list[CheckReport]:
    """M1(L(G)) >= 4m + (d-4)*M1(G) + 2*M2(G), in exact integers."""
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report("line_zagreb_lower", ">=", reason)]
    lg = line_graph(g).graph
    lhs = _int_index(m1(lg))
    rhs = 4 * g.m + (g.min_degree - 4) * _int_index(m1(g)) + 2 * _int_index(m2(g))
    return [
        exact_report(
            "line_zagreb_lower", ">=", RadicalNumber(lhs), RadicalNumber(rhs)
        )
    ]


# -- alpha-parameterized bounds ---------------------------------------------


def _exact_alpha(alpha: float | Rational) -> Fraction | None:
    """Snap to 1/2 or 1 (the exponents whose bound stays in the radical span)."""
    if isinstance(alpha, (int, Fraction)):
        frac = Fraction(alpha)
    else:
        doubled = round(2 * alpha)
        if abs(2 * alpha - doubled) > 1e-12:
            return None
        frac = Fraction(doubled, 2)
    return frac if frac in (Fraction(1, 2), Fraction(1)) else None


def check_variable_zagreb_bound(
    g: Graph, alpha: float | Rational = 1
) -> list[CheckReport]:
    """GA1 >= 2^(1/(2a)) * d^(1/2) * m^((2a+1)/(2a)) / (D * (sum du^(1-a))^(1/(2a))),
    for a > 0; tight exactly for regular graphs."""
    check_id = "variable_zagreb_bound"
    if float(alpha) <= 0:
        return [skipped_report(check_id, ">=", f"needs alpha > 0, got {alpha}")]
    reason = _edge_ready(g)
    if reason:
        return [skipped_report(check_id, ">=", reason)]
    ga = _ga(g)
    big, small, m = g.max_degree, g.min_degree, g.m
    snapped = _exact_alpha(alpha)
    if snapped == Fraction(1):
        # Cross-multiplied: GA1 * D * sqrt(n) >= sqrt(2*d) * m * sqrt(m)
        multiplier = big * RadicalNumber.sqrt_int(g.n)
        rhs_cmp = RadicalNumber.sqrt_int(2 * small) * RadicalNumber.sqrt_int(m) * m
    elif snapped == Fraction(1, 2):
        # GA1 * D * sum(sqrt(du)) >= 2 * sqrt(d) * m^2
        half_zagreb = m1_alpha(g, Fraction(1, 2)).exact
        assert half_zagreb is not None
        multiplier = big * half_zagreb
        rhs_cmp = RadicalNumber.sqrt_int(small) * (2 * m * m)
    else:
        degs = Counter(g.deg)
        pairs = _degree_pair_counts(g)
        af = float(alpha)

        def evaluate(power):
            lhs = _ga_by_power(pairs, power)
            var_zagreb = sum(cnt * power(d, 1 - af) for d, cnt in degs.items())
            rhs = (
                power(2, 1 / (2 * af))
                * power(small, 0.5)
                * power(m, (2 * af + 1) / (2 * af))
                / (big * power(var_zagreb, 1 / (2 * af)))
            )
            return lhs, rhs

        return [
            float_report(
                check_id,
                ">=",
                evaluate,
                notes=f"alpha={alpha}; float mode, tight exactly for regular "
                "graphs at every alpha",
            )
        ]
    cmp = compare(ga * multiplier, rhs_cmp)
    return [
        exact_report(
            check_id,
            ">=",
            ga,
            RadicalNumber(0),
            predicted_equality=is_regular(g),
            cmp_override=cmp,
            display_lhs=IndexValue.of_exact(ga),
            display_rhs=IndexValue.of_float(rhs_cmp.to_float() / multiplier.to_float()),
            notes=f"alpha={alpha}; decided exactly by cross-multiplication",
        )
    ]


def _degree_pair_counts(g: Graph) -> dict[tuple[int, int], int]:
    pairs: Counter[tuple[int, int]] = Counter()
    for u, v in g.edges:
        a, b = g.deg[u], g.deg[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return dict(pairs)


def _ga_by_power(pairs: dict[tuple[int, int], int], power) -> object:
    total = 0
    for (a, b), cnt in pairs.items():
        total += cnt * 2 * power(a * b, 0.5) / (a + b)
    return total


def check_line_variable_zagreb_bound(
    g: Graph, alpha: float | Rational = 1
) -> list[CheckReport]:
    """Line-graph lower bound with exponent a > 0, two branches (a <= 1, a > 1).

    The a > 1 branch uses the exponents (d-1)^((2a-1)/(2a)) * d^((1-a)/(2a)):
    bounding sum((du+dv-2)^(1-a)) from above for negative 1-a takes the factor
    ((d-1)/d)^(1-a), and the bound is then tight for regular graphs at every a.
    """
    check_id = "line_variable_zagreb_bound"
    if float(alpha) <= 0:
        return [skipped_report(check_id, ">=", f"needs alpha > 0, got {alpha}")]
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report(check_id, ">=", reason)]
    lg = line_graph(g).graph
    gl = _ga(lg)
    big, small, m = g.max_degree, g.min_degree, g.m
    m1g = int(_int_index(m1(g)))
    growth = m1g - 2 * m  # = 2 * edge count of the line graph
    if small == 1:
        return [
            exact_report(
                check_id,
                ">=",
                gl,
                RadicalNumber(0),
                notes=f"alpha={alpha}; vacuous: bound is zero (min degree 1)",
            )
        ]
    snapped = _exact_alpha(alpha)
    if snapped == Fraction(1):
        # GA1(L)*4*(D-1)*sqrt(m) >= sqrt(2d-2) * (M1-2m)^(3/2)
        multiplier = (4 * (big - 1)) * RadicalNumber.sqrt_int(m)
        rhs_cmp = (
            RadicalNumber.sqrt_int(2 * small - 2)
            * RadicalNumber.sqrt_int(growth)
            * growth
        )
    elif snapped == Fraction(1, 2):
        # GA1(L)*4*(D-1)^(3/2)*chi_(1/2) >= sqrt(2d-2)*sqrt(D)*(M1-2m)^2
        chi_half = chi_alpha(g, Fraction(1, 2)).exact
        assert chi_half is not None
        multiplier = 4 * (big - 1) * RadicalNumber.sqrt_int(big - 1) * chi_half
        rhs_cmp = (
            RadicalNumber.sqrt_int(2 * small - 2)
            * RadicalNumber.sqrt_int(big)
            * (growth * growth)
        )
    else:
        af = float(alpha)
        pair_counts = _degree_pair_counts(lg)
        base_pairs = _degree_pair_counts(g)

        def evaluate(power):
            lhs = _ga_by_power(pair_counts, power)
            chi = sum(cnt * power(a + b, 1 - af) for (a, b), cnt in base_pairs.items())
            if af <= 1:
                rhs = (
                    power(2 * small - 2, 0.5)
                    * power(big, (1 - af) / (2 * af))
                    * power(growth, (2 * af + 1) / (2 * af))
                    / (4 * power(big - 1, (1 + af) / (2 * af)) * power(chi, 1 / (2 * af)))
                )
            else:
                rhs = (
                    power(2, 0.5)
                    * power(small - 1, (2 * af - 1) / (2 * af))
                    * power(small, (1 - af) / (2 * af))
                    * power(growth, (2 * af + 1) / (2 * af))
                    / (4 * (big - 1) * power(chi, 1 / (2 * af)))
                )
            return lhs, rhs

        return [
            float_report(check_id, ">=", evaluate, notes=f"alpha={alpha}; float mode")
        ]
    cmp = compare(gl * multiplier, rhs_cmp)
    return [
        exact_report(
            check_id,
            ">=",
            gl,
            RadicalNumber(0),
            cmp_override=cmp,
            display_lhs=IndexValue.of_exact(gl),
            display_rhs=IndexValue.of_float(rhs_cmp.to_float() / multiplier.to_float()),
            notes=f"alpha={alpha}; decided exactly by cross-multiplication",
        )
    ]


def check_three_half_zagreb_bound(g: Graph) -> list[CheckReport]:
    """GA1 >= 2*sqrt(d)*m^2 / sum(du^(3/2)); tight exactly for regular graphs."""
    check_id = "three_half_zagreb_bound"
    reason = _edge_ready(g)
    if reason:
        return [skipped_report(check_id, ">=", reason)]
    ga = _ga(g)
    var = m1_alpha(g, Fraction(3, 2)).exact
    assert var is not None
    lhs_cmp = ga * var
    rhs_cmp = RadicalNumber.sqrt_int(g.min_degree) * (2 * g.m * g.m)
    cmp = compare(lhs_cmp, rhs_cmp)
    return [
        exact_report(
            check_id,
            ">=",
            ga,
            RadicalNumber(0),
            predicted_equality=is_regular(g),
            cmp_override=cmp,
            display_lhs=IndexValue.of_exact(ga),
            display_rhs=IndexValue.of_float(rhs_cmp.to_float() / var.to_float()),
            notes="decided exactly by cross-multiplication",
        )
    ]


def check_line_three_half_zagreb_bound(g: Graph) -> list[CheckReport]:
    """GA1(L(G)) >= (2d-2)^(1/2)*D^(3/2)*(M1-2m)^2 / (2*(D-1)^(3/2)*chi_(3/2))."""
    check_id = "line_three_half_zagreb_bound"
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report(check_id, ">=", reason)]
    lg = line_graph(g).graph
    gl = _ga(lg)
    big, small = g.max_degree, g.min_degree
    if small == 1:
        return [
            exact_report(
                check_id,
                ">=",
                gl,
                RadicalNumber(0),
                notes="vacuous: bound is zero (min degree 1)",
            )
        ]
    growth = int(_int_index(m1(g))) - 2 * g.m
    chi = chi_alpha(g, Fraction(3, 2)).exact
    assert chi is not None
    multiplier = 2 * (big - 1) * RadicalNumber.sqrt_int(big - 1) * chi
    rhs_cmp = (
        RadicalNumber.sqrt_int(2 * small - 2)
        * big
        * RadicalNumber.sqrt_int(big)
        * (growth * growth)
    )
    cmp = compare(gl * multiplier, rhs_cmp)
    return [
        exact_report(
            check_id,
            ">=",
            gl,
            RadicalNumber(0),
            cmp_override=cmp,
            display_lhs=IndexValue.of_exact(gl),
            display_rhs=IndexValue.of_float(rhs_cmp.to_float() / multiplier.to_float()),
            notes="decided exactly by cross-multiplication",
        )
    ]


# -- graph-free technical inequalities --------------------------------------


def check_term_shift_inequality(
    delta: Rational, t: Rational | float
) -> CheckReport:
    """sqrt((d+t-1)(d-1))/(2d+t-2) <= sqrt((d+t)d)/(2d+t) for d>=1, t>=0, 2d+t>2."""
    check_id = "term_shift_inequality"
    if isinstance(t, float) and not t.is_integer():
        t = Fraction(t).limit_denominator(10**9)
    d = Fraction(delta)
    tf = Fraction(t)
    if d < 1 or tf < 0 or 2 * d + tf <= 2:
        return skipped_report(
            check_id, "<=", f"needs d>=1, t>=0 and 2d+t>2 (d={d}, t={tf})"
        )
    lhs = RadicalNumber.sqrt_fraction((d + tf - 1) * (d - 1)) / (2 * d + tf - 2)
    rhs = RadicalNumber.sqrt_fraction((d + tf) * d) / (2 * d + tf)
    return exact_report(check_id, "<=", lhs, rhs)


def check_sqrt_shift_superadditivity(xs: Sequence[Rational]) -> CheckReport:
    """sum(sqrt(x_j - 1)) >= sqrt(sum(x_j) - 1) for x_j >= 2."""
    check_id = "sqrt_shift_superadditivity"
    vals = [Fraction(x) for x in xs]
    if not vals or any(x < 2 for x in vals):
        return skipped_report(check_id, ">=", "needs a nonempty list with all x >= 2")
    lhs = RadicalNumber(0)
    for x in vals:
        lhs = lhs + RadicalNumber.sqrt_fraction(x - 1)
    rhs = RadicalNumber.sqrt_fraction(sum(vals) - 1)
    return exact_report(check_id, ">=", lhs, rhs)


# -- registry ----------------------------------------------------------------


def _wrap_line_zagreb_identity(g: Graph) -> list[CheckReport]:
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report("line_zagreb_identity", "==", reason)]
    return [line_zagreb_identity(g)]


def _wrap_line_regular_iff(g: Graph) -> list[CheckReport]:
    reason = _nontrivial_ready(g)
    if reason:
        return [skipped_report("line_regular_iff", "==", reason)]
    return [line_regularity_characterization(g)]


def _wrap_line_tree_iff(g: Graph) -> list[CheckReport]:
    reason = _nontrivial_ready(g)
    if reason is None and not g.is_connected:
        reason = "requires a connected graph"
    if reason:
        return [skipped_report("line_tree_iff", "==", reason)]
    return line_tree_characterization(g)


_PLAIN_CHECKS: dict[str, Callable[[Graph], list[CheckReport]]] = {
    "extreme_degree_bounds": check_extreme_degree_bounds,
    "order_size_bounds": check_order_size_bounds,
    "star_lower_bound": check_star_lower_bound,
    "no_universal_vertex_bound": check_no_universal_vertex_bound,
    "edge_deletion_drop": check_edge_deletion_drop,
    "rationality": check_rationality,
    "line_ga_bounds": check_line_ga_bounds,
    "nordhaus_gaddum": check_nordhaus_gaddum,
    "line_ga_ratio_bound": check_line_ga_ratio_bound,
    "line_vs_graph_regular": check_line_vs_graph_regular,
    "line_order_bound": check_line_order_bound,
    "line_sqrt_bound": check_line_sqrt_bound,
    "line_zagreb_lower": check_line_zagreb_lower,
    "three_half_zagreb_bound": check_three_half_zagreb_bound,
    "line_three_half_zagreb_bound": check_line_three_half_zagreb_bound,
    "line_zagreb_identity": _wrap_line_zagreb_identity,
    "line_regular_iff": _wrap_line_regular_iff,
    "line_tree_iff": _wrap_line_tree_iff,
}

_ALPHA_CHECKS: dict[str, Callable[[Graph, float | Rational], list[CheckReport]]] = {
    "variable_zagreb_bound": check_variable_zagreb_bound,
    "line_variable_zagreb_bound": check_line_variable_zagreb_bound,
}

CHECK_IDS: tuple[str, ...] = tuple(list(_PLAIN_CHECKS) + list(_ALPHA_CHECKS))


def run_checks(
    g: Graph,
    ids: Iterable[str] | None = None,
    alphas: Sequence[float | Rational] = DEFAULT_ALPHAS,
) -> list[CheckReport]:
    """Run the selected checkers (default: all) on one graph."""
    selected = list(ids) if ids is not None else list(CHECK_IDS)
    out: list[CheckReport] = []
    for check_id in selected:
        if check_id in _PLAIN_CHECKS:
            out.extend(_PLAIN_CHECKS[check_id](g))
        elif check_id in _ALPHA_CHECKS:
            for alpha in alphas:
                out.extend(_ALPHA_CHECKS[check_id](g, alpha))
        else:
            raise KeyError(
                f"unknown check id {check_id!r}; available: {', '.join(CHECK_IDS)}"
            )
    return out
