"""Graph construction, classification, canonical forms, and text formats."""

from __future__ import annotations

import random
from itertools import permutations

import pytest

from gaindex.formats import (
    Graph6Error,
    iter_graph6,
    parse_graph6,
    parse_graph_spec,
    read_edge_list,
    to_graph6,
    write_edge_list,
)
from gaindex.graphs import (
    Graph,
    GraphKind,
    add_edge,
    canonical_form,
    canonical_graph,
    canonical_key,
    classify,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    delete_edge,
    disjoint_union,
    double_star_graph,
    from_edge_list,
    graph_name,
    is_biregular,
    is_isomorphic,
    is_minimal_edge,
    is_nontrivial,
    is_regular,
    is_star,
    path_graph,
    paw_graph,
    star_graph,
    strip_isolated,
)

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    nx = None


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, pairs)


def relabel(g: Graph, perm: list[int]) -> Graph:
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Independent oracle: try every vertex bijection."""
    if g.n != h.n or sorted(g.deg) != sorted(h.deg):
        return False
    h_edges = set(h.edges)
    for perm in permutations(range(g.n)):
        mapped = {
            tuple(sorted((perm[u], perm[v]))) for u, v in g.edges
        }
        if mapped == h_edges:
            return True
    return False


class TestConstruction:
    def test_smallest_edge(self):
        g = from_edge_list(2, [(0, 1)])
        assert g.m == 1 and g.n == 2

    def test_cycle_degrees(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert all(d == 2 for d in g.deg)

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (0, 1)])
        assert g.m == 1

    def test_reversed_pair_is_same_edge(self):
        g = from_edge_list(3, [(1, 0), (0, 1)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            from_edge_list(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            from_edge_list(3, [(0, 3)])

    def test_handshake_random(self):
        rng = random.Random(11)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 10))
            assert sum(g.deg) == 2 * g.m


class TestComponents:
    def test_two_components(self):
        g = disjoint_union(cycle_graph(3), path_graph(2))
        comps = components(g)
        assert len(comps) == 2
        assert sorted(c.n for c in comps) == [2, 3]

    def test_connected_graph_single(self):
        g = cycle_graph(4)
        assert len(components(g)) == 1

    def test_isolated_vertex_flagged(self):
        g = from_edge_list(3, [(0, 1)])
        assert g.isolated_vertices == (2,)
        assert len(components(g)) == 2

    def test_strip_isolated(self):
        g = from_edge_list(4, [(1, 3)])
        assert strip_isolated(g).n == 2


class TestNontrivial:
    def test_single_edge_false(self):
        assert not is_nontrivial(path_graph(2))

    def test_two_edge_path_true(self):
        assert is_nontrivial(path_graph(3))

    def test_mixed_union_false(self):
        assert not is_nontrivial(disjoint_union(cycle_graph(3), path_graph(2)))


class TestMinimalEdge:
    def naive_minimal(self, g: Graph, e) -> bool:
        u, v = e
        ok_u = all(g.deg[u] <= g.deg[w] for w in g.neighbors(u) if w != v)
        ok_v = all(g.deg[v] <= g.deg[w] for w in g.neighbors(v) if w != u)
        return ok_u and ok_v

    def test_cycle_edges_minimal(self):
        g = cycle_graph(4)
        assert all(is_minimal_edge(g, e) for e in g.edges)

    def test_path4_middle_not_minimal(self):
        g = path_graph(4)
        assert not is_minimal_edge(g, (1, 2))

    def test_path4_end_minimal(self):
        g = path_graph(4)
        assert is_minimal_edge(g, (0, 1))

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            is_minimal_edge(path_graph(3), (0, 2))

    def test_min_degree_endpoints_always_minimal(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 8))
            small = g.min_degree if g.m else None
            for e in g.edges:
                u, v = e
                if g.deg[u] == g.deg[v] == small:
                    assert is_minimal_edge(g, e)

    def test_agrees_with_naive_definition(self):
        rng = random.Random(6)
        for _ in range(200):
            g = random_graph(rng, rng.randint(2, 8))
            for e in g.edges:
                assert is_minimal_edge(g, e) == self.naive_minimal(g, e)


class TestDeleteEdge:
    def test_cycle_minus_edge_is_path(self):
        assert is_isomorphic(delete_edge(cycle_graph(4), (0, 1)), path_graph(4))

    def test_single_edge_leaves_isolated(self):
        g = delete_edge(path_graph(2), (0, 1))
        assert g.isolated_vertices == (0, 1)

    def test_triangle_minus_edge_is_path(self):
        assert is_isomorphic(delete_edge(cycle_graph(3), (0, 1)), path_graph(3))

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            delete_edge(path_graph(3), (0, 2))

    def test_delete_then_readd_is_identity_up_to_iso(self):
        rng = random.Random(12)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 7))
            if not g.edges:
                continue
            e = rng.choice(g.edges)
            again = add_edge(delete_edge(g, e), *e)
            assert canonical_key(again) == canonical_key(g)


class TestCanonicalForm:
    def test_permutation_invariance(self):
        rng = random.Random(99)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 7))
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == canonical_form(g)

    def test_p3_vs_triangle_differ(self):
        assert canonical_form(path_graph(3)) != canonical_form(cycle_graph(3))

    def test_c4_vs_paw_differ(self):
        # Same order and size; the brute-force oracle confirms non-isomorphism.
        assert not brute_force_isomorphic(cycle_graph(4), paw_graph())
        assert canonical_form(cycle_graph(4)) != canonical_form(paw_graph())

    def test_matches_brute_force_oracle(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(2, 5)
            g, h = random_graph(rng, n), random_graph(rng, n)
            assert (canonical_key(g) == canonical_key(h)) == brute_force_isomorphic(
                g, h
            )

    def test_key_is_true_permutation_minimum(self):
        def brute_min_key(g: Graph) -> tuple[int, ...]:
            edges = set(g.edges)
            best = None
            for order in permutations(range(g.n)):
                cols = []
                for k in range(1, g.n):
                    col = 0
                    for j in range(k):
                        u, v = order[j], order[k]
                        if ((u, v) if u < v else (v, u)) in edges:
                            col |= 1 << (k - 1 - j)
                    cols.append(col)
                t = tuple(cols)
                if best is None or t < best:
                    best = t
            return best or ()

        rng = random.Random(123)
        for _ in range(40):
            n = rng.randint(2, 6)
            g = random_graph(rng, n, p=rng.choice([0.2, 0.5, 0.8]))
            assert canonical_key(g) == brute_min_key(g)

    def test_canonical_graph_is_isomorphic_rep(self):
        rng = random.Random(14)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 7))
            rep = canonical_graph(g)
            assert canonical_key(rep) == canonical_key(g)

    def test_order_limit(self):
        with pytest.raises(ValueError, match="n <= 9"):
            canonical_form(path_graph(10))


class TestClassify:
    def test_cycle(self):
        cls = classify(cycle_graph(4))
        assert cls.kind is GraphKind.CYCLE and cls.params == (4,)

    def test_star_with_counts(self):
        cls = classify(star_graph(4))
        assert cls.kind is GraphKind.STAR
        assert cls.degree_class_counts == {3: 1, 1: 3}

    def test_complete_bipartite(self):
        cls = classify(complete_bipartite_graph(5, 20))
        assert cls.kind is GraphKind.COMPLETE_BIPARTITE and cls.params == (5, 20)
        g = complete_bipartite_graph(5, 20)
        assert is_biregular(g) and not is_regular(g)
        assert g.max_degree == 20 and g.min_degree == 5

    def test_regular_beats_complete_bipartite(self):
        assert classify(complete_bipartite_graph(3, 3)).kind is GraphKind.REGULAR

    def test_path_and_star_predicates_overlap(self):
        p3 = path_graph(3)
        assert classify(p3).kind is GraphKind.PATH
        assert is_star(p3) and is_biregular(p3)

    def test_single_edge_is_two_vertex_star(self):
        assert is_star(path_graph(2))

    def test_double_star(self):
        cls = classify(double_star_graph(1, 2))
        assert cls.kind is GraphKind.DOUBLE_STAR and cls.params == (1, 2)

    def test_disconnected_is_other(self):
        g = disjoint_union(cycle_graph(3), cycle_graph(3))
        assert classify(g).kind is GraphKind.OTHER

    def test_names(self):
        assert graph_name(path_graph(5)) == "P5"
        assert graph_name(cycle_graph(3)) == "C3"
        assert graph_name(star_graph(6)) == "S6"
        assert graph_name(double_star_graph(1, 2)) == "DS1,2"
        assert graph_name(complete_bipartite_graph(2, 3)) == "K2,3"
        assert graph_name(complete_graph(4)) == "K4"
        assert graph_name(paw_graph()) == "paw"


class TestGraph6:
    def test_parse_single_edge(self):
        assert parse_graph6("A_").edges == ((0, 1),)

    def test_parse_triangle(self):
        g = parse_graph6("Bw")
        assert is_isomorphic(g, cycle_graph(3))

    def test_empty_rejected_with_offset(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("")
        assert err.value.offset == 0

    def test_bad_character_offset(self):
        with pytest.raises(Graph6Error):
            parse_graph6("B\x07")

    def test_wrong_length(self):
        with pytest.raises(Graph6Error, match="data characters"):
            parse_graph6("Bww")

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_").m == 1

    def test_roundtrip_small(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 12))
            assert parse_graph6(to_graph6(g)) == g

    def test_text_roundtrip_bit_exact(self):
        rng = random.Random(4)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 9))
            line = to_graph6(g)
            assert to_graph6(parse_graph6(line)) == line

    def test_large_order_header(self):
        g = from_edge_list(100, [(0, 99)])
        assert parse_graph6(to_graph6(g)) == g

    @pytest.mark.skipif(nx is None, reason="networkx unavailable")
    def test_against_networkx_encoder(self):
        rng = random.Random(8)
        sizes = [rng.randint(1, 11) for _ in range(97)] + [62, 63, 64]
        for n in sizes:
            g = random_graph(rng, n, p=0.5 if n < 20 else 0.08)
            nx_graph = nx.Graph()
            nx_graph.add_nodes_from(range(g.n))
            nx_graph.add_edges_from(g.edges)
            reference = nx.to_graph6_bytes(nx_graph, header=False).decode().strip()
            assert to_graph6(g) == reference
            back = nx.from_graph6_bytes(to_graph6(g).encode())
            assert set(back.edges()) == {tuple(e) for e in g.edges}

    def test_iter_graph6_lines(self):
        graphs = iter_graph6("A_\n\nBw\n")
        assert [g.n for g in graphs] == [2, 3]


class TestEdgeListFormat:
    def test_roundtrip(self):
        g = paw_graph()
        assert read_edge_list(write_edge_list(g)) == g

    def test_format_shape(self):
        assert write_edge_list(path_graph(2)) == "2 1\n0 1\n"

    def test_bad_header(self):
        with pytest.raises(ValueError, match="header"):
            read_edge_list("x y\n0 1\n")

    def test_count_mismatch(self):
        with pytest.raises(ValueError, match="edge lines"):
            read_edge_list("3 2\n0 1\n")


class TestGraphSpec:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            ("P5", path_graph(5)),
            ("C4", cycle_graph(4)),
            ("S5", star_graph(5)),
            ("K2,3", complete_bipartite_graph(2, 3)),
            ("K4", complete_graph(4)),
            ("DS1,2", double_star_graph(1, 2)),
            ("paw", paw_graph()),
        ],
    )
    def test_named(self, spec, expected):
        assert is_isomorphic(parse_graph_spec(spec), expected)

    def test_graph6_fallback(self):
        assert parse_graph_spec("Bw").m == 3

    def test_junk_rejected(self):
        with pytest.raises(ValueError):
            parse_graph_spec("nonsense!!")
