"""Verification campaigns: exhaustive small-order sweeps plus seeded random ones."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .checks import (
    DEFAULT_ALPHAS,
    check_sqrt_shift_superadditivity,
    check_term_shift_inequality,
    run_checks,
)
from .enumeration import (
    buckets_match_families,
    classify_line_small_values,
    classify_small_values,
    connected_with_edges,
    expected_line_small_value_families,
    expected_small_value_families,
    random_connected,
)
from .graphs import Graph, canonical_form
from .report import CheckReport

__all__ = ["CheckAggregate", "SweepResult", "exhaustive_sweep", "random_sweep"]


@dataclass
class CheckAggregate:
    check_id: str
    tested: int = 0
    skipped: int = 0
    violations: int = 0
    equalities: int = 0
    mismatches: int = 0


@dataclass
class SweepResult:
    aggregates: dict[str, CheckAggregate] = field(default_factory=dict)
    failures: list[tuple[str, CheckReport]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.failures

    def absorb(self, source: str, reports: list[CheckReport]) -> None:
        for report in reports:
            agg = self.aggregates.setdefault(
                report.check_id, CheckAggregate(report.check_id)
            )
            if not report.preconditions_met:
                agg.skipped += 1
                continue
            agg.tested += 1
            if report.equality:
                agg.equalities += 1
            if not report.holds:
                agg.violations += 1
                self.failures.append((source, report))
            if report.characterization_consistent is False:
                agg.mismatches += 1
                self.failures.append((source, report))


def _sweep_graphs(
    result: SweepResult,
    graphs: list[Graph],
    alphas: tuple[Fraction, ...],
    label: str,
) -> None:
    for i, g in enumerate(graphs):
        source = f"{label}:{canonical_form(g) if g.n <= 9 else i}"
        result.absorb(source, run_checks(g, alphas=alphas))


def exhaustive_sweep(
    n_max: int = 7, alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS
) -> SweepResult:
    """Every checker on every connected graph with an edge, up to order n_max.

    Also reproduces the small-value bucket lists and spot-checks the two
    graph-free inequalities on a rational grid.
    """
    if n_max > 7:
        raise ValueError("exhaustive sweeps support n_max <= 7")
    result = SweepResult()
    _sweep_graphs(result, connected_with_edges(n_max), alphas, "exhaustive")

    if n_max >= 6:
        buckets = classify_small_values(6)
        if buckets_match_families(buckets, expected_small_value_families()):
            result.notes.append("small-value buckets reproduced exactly")
        else:
            result.notes.append("small-value buckets MISMATCH")
            result.failures.append(
                ("buckets", _bucket_failure("small_value_buckets"))
            )
    if n_max >= 7:
        line_buckets = classify_line_small_values(7)
        if buckets_match_families(
            line_buckets, expected_line_small_value_families()
        ):
            result.notes.append("line-graph small-value buckets reproduced exactly")
        else:
            result.notes.append("line-graph small-value buckets MISMATCH")
            result.failures.append(
                ("buckets", _bucket_failure("line_small_value_buckets"))
            )

    for delta in (1, 2, 3, 5):
        for t in (0, Fraction(1, 2), 1, Fraction(7, 3), 5):
            if 2 * delta + t <= 2:
                continue
            result.absorb(
                "scalar-grid", [check_term_shift_inequality(delta, t)]
            )
    for xs in ([2], [2, 2], [3, 5, 2], [Fraction(5, 2), 2, 7, 2]):
        result.absorb("scalar-grid", [check_sqrt_shift_superadditivity(xs)])
    return result


def _bucket_failure(which: str) -> CheckReport:
    from .report import skipped_report

    report = skipped_report(which, "==", "bucket membership mismatch")
    report.preconditions_met = True
    report.holds = False
    return report


def random_sweep(
    trials: int,
    seed: int,
    n_high: int = 12,
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS,
) -> SweepResult:
    """Every checker on seeded random connected graphs (reproducible)."""
    rng = random.Random(seed)
    result = SweepResult()
    for i in range(trials):
        g = random_connected(rng, n_high=n_high)
        result.absorb(f"random[{i}]", run_checks(g, alphas=alphas))
    return result
