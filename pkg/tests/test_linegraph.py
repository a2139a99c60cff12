"""Line graph construction and its structural identities."""

from __future__ import annotations

import random

import pytest

from gaindex.graphs import (
    canonical_form,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    is_isomorphic,
    path_graph,
    paw_graph,
    star_graph,
)
from gaindex.indices import m1
from gaindex.linegraph import (
    line_graph,
    line_regularity_characterization,
    line_tree_characterization,
    line_zagreb_identity,
    regular_line_condition,
    verify_degree_identity,
)
from gaindex.radicals import RadicalNumber


def random_nontrivial_connected(rng: random.Random, n: int):
    while True:
        pairs = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = from_edge_list(n, pairs)
        if g.is_connected and g.m >= 2:
            return g


class TestConstruction:
    def test_path4_gives_path3(self):
        assert is_isomorphic(line_graph(path_graph(4)).graph, path_graph(3))

    def test_star4_gives_triangle(self):
        assert is_isomorphic(line_graph(star_graph(4)).graph, cycle_graph(3))

    def test_star5_gives_k4(self):
        assert is_isomorphic(line_graph(star_graph(5)).graph, complete_graph(4))

    def test_cycles_are_fixed_points(self):
        for n in range(3, 9):
            assert is_isomorphic(line_graph(cycle_graph(n)).graph, cycle_graph(n))

    def test_paths_shrink(self):
        for n in range(3, 10):
            assert is_isomorphic(line_graph(path_graph(n)).graph, path_graph(n - 1))

    def test_stars_complete(self):
        for n in range(4, 9):
            assert is_isomorphic(
                line_graph(star_graph(n)).graph, complete_graph(n - 1)
            )

    def test_triangle_star_collision(self):
        first = canonical_form(line_graph(cycle_graph(3)).graph)
        second = canonical_form(line_graph(star_graph(4)).graph)
        assert first == second

    def test_trivial_input_rejected(self):
        with pytest.raises(ValueError, match="at least two edges"):
            line_graph(path_graph(2))
        with pytest.raises(ValueError, match="at least two edges"):
            line_graph(disjoint_union(cycle_graph(3), path_graph(2)))

    def test_vertex_correspondence_degrees(self):
        g = paw_graph()
        result = line_graph(g)
        for edge, idx in result.vertex_of_edge.items():
            u, v = edge
            assert result.graph.deg[idx] == g.deg[u] + g.deg[v] - 2

    def test_stats_tuple(self):
        result = line_graph(cycle_graph(4))
        assert result.stats == (2, 2, 4, 4)


class TestIdentities:
    def test_degree_identity_examples(self):
        assert verify_degree_identity(cycle_graph(4))
        assert verify_degree_identity(paw_graph())

    def test_degree_identity_random(self):
        rng = random.Random(71)
        for _ in range(50):
            g = random_nontrivial_connected(rng, rng.randint(3, 10))
            assert verify_degree_identity(g)

    def test_size_identities_random(self):
        rng = random.Random(72)
        for _ in range(50):
            g = random_nontrivial_connected(rng, rng.randint(3, 12))
            lg = line_graph(g).graph
            assert lg.n == g.m
            m1g = m1(g).exact
            assert m1g is not None
            assert 2 * lg.m == int(m1g.as_fraction()) - 2 * g.m

    @pytest.mark.parametrize(
        "builder,expected_m1_line",
        [
            (cycle_graph(4), 16),
            (star_graph(4), 12),
            (path_graph(3), 2),
        ],
    )
    def test_zagreb_identity_values(self, builder, expected_m1_line):
        report = line_zagreb_identity(builder)
        assert report.holds and report.equality
        assert report.lhs.exact == RadicalNumber(expected_m1_line)

    def test_zagreb_identity_random(self):
        rng = random.Random(73)
        for _ in range(50):
            g = random_nontrivial_connected(rng, rng.randint(3, 10))
            assert line_zagreb_identity(g).holds


class TestRegularityCharacterization:
    def test_two_triangles(self):
        g = disjoint_union(cycle_graph(3), cycle_graph(3))
        report = line_regularity_characterization(g)
        assert report.holds and regular_line_condition(g)

    def test_star_is_covered(self):
        report = line_regularity_characterization(star_graph(4))
        assert report.holds and regular_line_condition(star_graph(4))

    def test_mixed_cycle_union(self):
        # Components with equal degree sums: the line graph stays regular.
        g = disjoint_union(cycle_graph(3), cycle_graph(4))
        report = line_regularity_characterization(g)
        assert report.holds
        lg = line_graph(g).graph
        assert lg.max_degree == lg.min_degree

    def test_cycle_plus_star_same_sum(self):
        # (2,2) and (3,1): both sums are 4, so the line graph is regular.
        g = disjoint_union(cycle_graph(3), star_graph(4))
        assert regular_line_condition(g)
        lg = line_graph(g).graph
        assert lg.max_degree == lg.min_degree
        assert line_regularity_characterization(g).holds

    def test_mismatched_sums(self):
        # (2,2) and (4,1): sums 4 vs 5, so the line graph cannot be regular.
        g = disjoint_union(cycle_graph(4), star_graph(5))
        assert not regular_line_condition(g)
        lg = line_graph(g).graph
        assert lg.max_degree != lg.min_degree
        assert line_regularity_characterization(g).holds

    def test_both_directions_random(self):
        rng = random.Random(74)
        for _ in range(50):
            g = random_nontrivial_connected(rng, rng.randint(3, 9))
            assert line_regularity_characterization(g).holds


class TestTreeCharacterization:
    def test_path5(self):
        reports = line_tree_characterization(path_graph(5))
        assert all(r.holds for r in reports)
        lg = line_graph(path_graph(5)).graph
        assert lg.is_connected and lg.m == lg.n - 1

    def test_cycle5(self):
        reports = line_tree_characterization(cycle_graph(5))
        assert all(r.holds for r in reports)
        by_id = {r.check_id: r for r in reports}
        assert by_id["line_size_monotone"].equality  # m == m(L) for cycles

    def test_star4(self):
        reports = line_tree_characterization(star_graph(4))
        by_id = {r.check_id: r for r in reports}
        assert by_id["line_tree_iff"].holds
        assert by_id["line_size_monotone"].holds

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            line_tree_characterization(
                disjoint_union(cycle_graph(3), cycle_graph(3))
            )

    def test_iff_random(self):
        rng = random.Random(75)
        for _ in range(50):
            g = random_nontrivial_connected(rng, rng.randint(3, 9))
            assert all(r.holds for r in line_tree_characterization(g))
