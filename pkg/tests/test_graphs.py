"""Representation, parsing, families, and structural predicates."""

import math

import networkx as nx
import pytest

from signedwiener.graphs import (
    Graph,
    GraphFormatError,
    bfs_distances,
    blowup_cycle_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    emit_colored_graph,
    emit_graph,
    emit_signed_graph,
    is_connected,
    is_k_connected,
    make_family,
    parse_any,
    parse_colored_graph,
    parse_graph,
    parse_graph6,
    parse_signed_graph,
    path_graph,
    square,
    star_graph,
    structural_report,
    theta_graph,
    union_at_vertex,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraphBasics:
    def test_edges_normalized_in_input_order(self):
        g = Graph(4, [(2, 1), (0, 3), (3, 1)])
        assert g.edges == ((1, 2), (0, 3), (1, 3))
        assert g.edge_index(1, 2) == 0
        assert g.edge_index(3, 0) == 1
        assert g.has_edge(3, 1) and not g.has_edge(0, 1)

    def test_neighbors_and_degrees(self):
        g = star_graph(5)
        assert g.neighbors(0) == (1, 2, 3, 4)
        assert g.degree(0) == 4 and g.degree(3) == 1
        assert g.neighbor_bits(0) == 0b11110

    def test_rejects_loops_duplicates_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(0, 1), (1, 2)])
        c = Graph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != c


class TestFamilies:
    def test_counts(self):
        assert path_graph(7).m == 6
        assert cycle_graph(11).m == 11
        assert star_graph(6).m == 5
        assert complete_graph(6).m == 15
        assert complete_bipartite_graph(2, 3).m == 6

    def test_make_family_dispatch(self):
        assert make_family("cycle", [11]) == cycle_graph(11)
        assert make_family("complete-bipartite", [2, 3]) == \
            complete_bipartite_graph(2, 3)
        with pytest.raises(ValueError):
            make_family("hypercube", [3])
        with pytest.raises(ValueError):
            make_family("path", [3, 4])

    def test_blowup_of_triangle(self):
        g = make_family("blowup", [2, 2, 2])
        assert g.n == 6 and g.m == 12
        # parts are contiguous; no edges inside a part
        for p in ((0, 1), (2, 3), (4, 5)):
            assert not g.has_edge(*p)
        assert nx.is_isomorphic(to_nx(g), nx.complete_multipartite_graph(2, 2, 2))

    def test_blowup_trivial_parts_is_base_cycle(self):
        g = blowup_cycle_graph([1, 1, 1, 1, 1])
        assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(5))

    def test_theta_small(self):
        g = theta_graph([1, 2, 2])
        assert g.n == 4 and g.m == 5
        h = theta_graph([2, 2, 2])
        assert nx.is_isomorphic(to_nx(h), nx.complete_bipartite_graph(2, 3))

    def test_theta_rejects_parallel_edges(self):
        with pytest.raises(ValueError):
            theta_graph([1, 1, 2])
        with pytest.raises(ValueError):
            theta_graph([2])


class TestSquare:
    def test_p4_squared(self):
        g = square(path_graph(4))
        assert set(g.edges) == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}

    def test_star_squared_is_complete(self):
        for n in range(2, 7):
            assert square(star_graph(n)) == complete_graph(n)

    def test_c5_squared_is_complete(self):
        assert square(cycle_graph(5)) == complete_graph(5)

    def test_square_edges_are_near_pairs(self):
        g = path_graph(9)
        sq = square(g)
        dist = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert sq.has_edge(u, v) == (dist[u][v] <= 2)


class TestDeletion:
    def test_k4_minus_vertex(self):
        d = delete_vertices(complete_graph(4), {3})
        assert d.graph == complete_graph(3)
        assert d.vertex_map == {0: 0, 1: 1, 2: 2}
        assert d.edge_refs == (0, 1, 3)

    def test_c5_minus_vertex_is_path(self):
        d = delete_vertices(cycle_graph(5), {0})
        assert nx.is_isomorphic(to_nx(d.graph), nx.path_graph(4))

    def test_disconnection(self):
        d = delete_vertices(path_graph(3), {1})
        assert d.graph.n == 2 and d.graph.m == 0

    def test_degrees_drop_by_deleted_neighbors(self):
        g = complete_bipartite_graph(3, 4)
        dead = {0, 5}
        d = delete_vertices(g, dead)
        for old, new in d.vertex_map.items():
            lost = sum(1 for w in g.neighbors(old) if w in dead)
            assert d.graph.degree(new) == g.degree(old) - lost


class TestStructure:
    def test_c6(self):
        r = structural_report(cycle_graph(6))
        assert r.connected and r.bipartite and not r.has_odd_cycle
        assert r.min_degree == 2 and r.edge_count == 6 and r.leaf_count == 0

    def test_k4(self):
        r = structural_report(complete_graph(4))
        assert r.connected and not r.bipartite and r.has_odd_cycle
        assert r.min_degree == 3 and r.edge_count == 6

    def test_star_leaves(self):
        assert structural_report(star_graph(5)).leaf_count == 4

    def test_bipartition_parts(self):
        r = structural_report(complete_bipartite_graph(2, 3))
        assert r.parts is not None
        sizes = sorted(map(len, r.parts))
        assert sizes == [2, 3]

    def test_matches_networkx_on_random_graphs(self):
        import random
        rng = random.Random(7)
        for trial in range(40):
            n = rng.randint(1, 9)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            edges = [e for e in pairs if rng.random() < 0.4]
            g = Graph(n, edges)
            h = to_nx(g)
            r = structural_report(g)
            assert r.connected == (n <= 1 or nx.is_connected(h))
            assert r.bipartite == nx.is_bipartite(h)

    def test_bfs_distances(self):
        g = union_at_vertex(path_graph(3), path_graph(3), 2, 0)
        d = bfs_distances(g, 0)
        assert d == [0, 1, 2, 3, 4]
        lonely = Graph(2, [])
        assert bfs_distances(lonely, 0) == [0, math.inf]


class TestConnectivity:
    def test_cycle_is_2_connected(self):
        assert is_k_connected(cycle_graph(5), 2)
        assert not is_k_connected(cycle_graph(5), 3)

    def test_path_has_cut_vertex(self):
        assert not is_k_connected(path_graph(4), 2)

    def test_k5(self):
        assert is_k_connected(complete_graph(5), 4)

    def test_k1_matches_connected(self):
        for g in (path_graph(4), Graph(3, [(0, 1)]), complete_graph(1)):
            assert is_k_connected(g, 1) == is_connected(g)


class TestUnion:
    def test_two_triangles(self):
        g = union_at_vertex(complete_graph(3), complete_graph(3), 0, 0)
        assert g.n == 5 and g.m == 6

    def test_identity_glue(self):
        h = cycle_graph(5)
        assert union_at_vertex(complete_graph(1), h, 0, 0) == h

    def test_two_c4_share_degree_4_vertex(self):
        g = union_at_vertex(cycle_graph(4), cycle_graph(4), 1, 2)
        assert g.n == 7 and g.m == 8
        assert sorted(g.degree(v) for v in range(7)).count(4) == 1

    def test_edge_order_is_concatenation(self):
        g1, g2 = path_graph(3), path_graph(2)
        g = union_at_vertex(g1, g2, 2, 0)
        assert g.edges[:g1.m] == g1.edges


class TestParsing:
    def test_plain(self):
        g = parse_graph("3 2\n0 1\n1 2\n")
        assert g == path_graph(3)

    def test_single_vertex(self):
        g = parse_graph("1 0\n")
        assert g.n == 1 and g.m == 0

    def test_signed_and_colored(self):
        g, signs = parse_signed_graph("3 3\n0 1 +\n1 2 -\n0 2 +\n")
        assert signs == (1, -1, 1)
        g, colors = parse_colored_graph("3 3\n0 1 1\n1 2 2\n0 2 3\n")
        assert colors == (1, 2, 3)

    def test_comments_preserved(self):
        p = parse_any("# claim: test\n2 1\n0 1  # trailing\n# another\n")
        assert p.comments == ("claim: test", "another")
        assert p.graph.m == 1

    def test_duplicate_edge_reports_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph("3 2\n0 1\n0 1\n")
        assert exc.value.line == 3

    def test_errors(self):
        with pytest.raises(GraphFormatError):
            parse_graph("")
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n0 2\n")
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n0 0\n")
        with pytest.raises(GraphFormatError):
            parse_graph("2 2\n0 1\n")
        with pytest.raises(GraphFormatError):
            parse_graph("3 2\n0 1 +\n1 2\n")
        with pytest.raises(GraphFormatError):
            parse_colored_graph("2 1\n0 1 0\n")
        with pytest.raises(GraphFormatError):
            parse_graph("3 2\n0 1 +\n1 2 +\n")

    def test_round_trip_plain_signed_colored(self):
        g = theta_graph([1, 2, 2, 3])
        assert parse_graph(emit_graph(g)) == g
        signs = tuple(1 if i % 2 else -1 for i in range(g.m))
        g2, s2 = parse_signed_graph(emit_signed_graph(g, signs))
        assert g2 == g and s2 == signs
        colors = tuple(i % 3 + 1 for i in range(g.m))
        g3, c3 = parse_colored_graph(emit_colored_graph(g, colors))
        assert g3 == g and c3 == colors

    def test_emit_validates(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            emit_signed_graph(g, (1,))
        with pytest.raises(ValueError):
            emit_colored_graph(g, (0, 1))


class TestGraph6:
    def test_known_encodings(self):
        # 'D?{' is from the format's reference examples
        g = parse_graph6("D?{")
        h = nx.from_graph6_bytes(b"D?{")
        assert nx.is_isomorphic(to_nx(g), h)
        assert g.edges == tuple(sorted(h.edges()))

    def test_matches_networkx_generator(self):
        import random
        rng = random.Random(3)
        for trial in range(30):
            n = rng.randint(1, 12)
            h = nx.gnp_random_graph(n, 0.5, seed=rng.randint(0, 10**6))
            line = nx.to_graph6_bytes(h, header=False).decode().strip()
            g = parse_graph6(line)
            assert g.n == h.number_of_nodes()
            assert set(g.edges) == {(min(u, v), max(u, v)) for u, v in h.edges()}

    def test_rejects_large_and_garbage(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("~??")
        with pytest.raises(GraphFormatError):
            parse_graph6("")
        with pytest.raises(GraphFormatError):
            parse_graph6("C")
