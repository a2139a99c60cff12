"""Vertex-degree-based topological indices, exact wherever possible.

The geometric-arithmetic index and every integer or half-integer exponent
variant live in the rational radical span, so those paths are exact; other
exponents fall back to floats.  Exponents arriving as decimal text are snapped
to the nearest integer or half-integer when within 1e-12, so ``0.5`` hits the
exact path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import Graph
from .radicals import RadicalNumber, radical_sqrt

__all__ = [
    "IndexValue",
    "ga1",
    "m1_alpha",
    "m2_alpha",
    "chi_alpha",
    "m1",
    "m2",
    "forgotten",
    "harmonic",
    "inverse_degree",
    "randic",
    "sum_connectivity",
    "all_indices",
]

_SNAP = 1e-12


@dataclass(frozen=True)
class IndexValue:
    """An index value: exact radical form when available, float always."""

    exact: RadicalNumber | None
    approx: float
    error: float

    @classmethod
    def of_exact(cls, value: RadicalNumber) -> "IndexValue":
        approx, err = value.float_with_error()
        return cls(exact=value, approx=approx, error=err)

    @classmethod
    def of_float(cls, value: float, rel_error: float = 1e-12) -> "IndexValue":
        return cls(exact=None, approx=value, error=abs(value) * rel_error)

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return repr(self.approx)


def _require_no_edgeless_component(g: Graph) -> None:
    # A component without an edge is exactly an isolated vertex.
    isolated = g.isolated_vertices
    if g.n == 0 or isolated:
        raise ValueError(
            "index requires every component to contain an edge; "
            f"isolated vertices: {list(isolated)}"
        )


def _degree_pairs(g: Graph) -> Counter[tuple[int, int]]:
    pairs: Counter[tuple[int, int]] = Counter()
    for u, v in g.edges:
        a, b = g.deg[u], g.deg[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return pairs


@lru_cache(maxsize=1024)
def _ga1_exact(g: Graph) -> RadicalNumber:
    terms: dict[int, Fraction] = {}
    for (a, b), count in _degree_pairs(g).items():
        s, q = radical_sqrt(a * b)
        cur = terms.get(q, Fraction(0)) + Fraction(2 * s * count, a + b)
        if cur:
            terms[q] = cur
        else:
            terms.pop(q, None)
    return RadicalNumber(terms)


def ga1(g: Graph) -> IndexValue:
    """Geometric-arithmetic index: sum over edges of 2*sqrt(du*dv)/(du+dv)."""
    _require_no_edgeless_component(g)
    return IndexValue.of_exact(_ga1_exact(g))


def _snap_exponent(alpha: float | int | Fraction) -> Fraction | None:
    """Nearest integer or half-integer when within 1e-12, else None."""
    if isinstance(alpha, int):
        return Fraction(alpha)
    if isinstance(alpha, Fraction):
        return alpha if alpha.denominator in (1, 2) else None
    doubled = round(2 * alpha)
    if abs(2 * alpha - doubled) <= 2 * _SNAP:
        return Fraction(doubled, 2)
    return None


def _exact_pow(base: int, alpha: Fraction) -> RadicalNumber:
    """``base ** alpha`` for integer base >= 1 and alpha in Z or Z + 1/2."""
    if alpha.denominator == 1:
        return RadicalNumber(Fraction(base) ** alpha.numerator)
    k = (alpha.numerator - 1) // 2
    s, q = radical_sqrt(base)
    return RadicalNumber({q: Fraction(base) ** k * s})


def _sum_powers(counts: Counter[int], alpha: float | Fraction) -> IndexValue:
    snapped = _snap_exponent(alpha)
    if snapped is not None:
        total = RadicalNumber(0)
        for base, count in sorted(counts.items()):
            total = total + count * _exact_pow(base, snapped)
        return IndexValue.of_exact(total)
    total_f = sum(count * float(base) ** float(alpha) for base, count in counts.items())
    return IndexValue.of_float(total_f)


def m1_alpha(g: Graph, alpha: float | int | Fraction) -> IndexValue:
    """Variable first Zagreb index: sum of deg(u)**alpha over vertices."""
    _require_no_edgeless_component(g)
    return _sum_powers(Counter(g.deg), alpha)


def m2_alpha(g: Graph, alpha: float | int | Fraction) -> IndexValue:
    """Variable second Zagreb index: sum of (du*dv)**alpha over edges."""
    _require_no_edgeless_component(g)
    counts: Counter[int] = Counter()
    for (a, b), count in _degree_pairs(g).items():
        counts[a * b] += count
    return _sum_powers(counts, alpha)


def chi_alpha(g: Graph, alpha: float | int | Fraction) -> IndexValue:
    """General sum-connectivity index: sum of (du+dv)**alpha over edges."""
    _require_no_edgeless_component(g)
    counts: Counter[int] = Counter()
    for (a, b), count in _degree_pairs(g).items():
        counts[a + b] += count
    return _sum_powers(counts, alpha)


def m1(g: Graph) -> IndexValue:
    return m1_alpha(g, 2)


def m2(g: Graph) -> IndexValue:
    return m2_alpha(g, 1)


def forgotten(g: Graph) -> IndexValue:
    return m1_alpha(g, 3)


def harmonic(g: Graph) -> IndexValue:
    inner = chi_alpha(g, -1)
    assert inner.exact is not None
    return IndexValue.of_exact(2 * inner.exact)


def inverse_degree(g: Graph) -> IndexValue:
    return m1_alpha(g, -1)


def randic(g: Graph) -> IndexValue:
    return m2_alpha(g, Fraction(-1, 2))


def sum_connectivity(g: Graph) -> IndexValue:
    return chi_alpha(g, Fraction(-1, 2))


def all_indices(g: Graph) -> dict[str, IndexValue]:
    """The standard battery, keyed by conventional short names."""
    return {
        "GA1": ga1(g),
        "M1": m1(g),
        "M2": m2(g),
        "F": forgotten(g),
        "H": harmonic(g),
        "ID": inverse_degree(g),
        "R": randic(g),
        "chi": sum_connectivity(g),
    }
