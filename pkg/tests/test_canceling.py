"""Verification procedures, structural filters, theta recognition."""

import itertools
import math
import random

import pytest

import naive
from signedwiener.canceling import (
    CancelingVerdict,
    is_k_canceling_signing,
    is_rk_canceling_coloring,
    necessary_conditions,
    rk_shortcut_agreement,
    soltes_check_classical,
    soltes_check_signed,
    theta_recognize,
    theta_verdict,
)
from signedwiener.distances import EdgeColoring, Signing
from signedwiener.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    square,
    star_graph,
    theta_graph,
    union_at_vertex,
)


def cyclic_signs(n):
    """+1 on the Hamilton cycle 0-1-...-(n-1)-0 of K_n, -1 elsewhere."""
    g = complete_graph(n)
    cyc = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return g, tuple(1 if e in cyc else -1 for e in g.edges)


def square_path_signs(n):
    sq = square(path_graph(n))
    return sq, tuple(1 if v - u == 1 else -1 for u, v in sq.edges)


def kn_cycle_coloring(n, r, k):
    """Color cycle on the first 3(k-1)(r-1) vertices through 1..r-1,
    everything else color r."""
    m = 3 * (k - 1) * (r - 1)
    g = complete_graph(n)
    colors = []
    for u, v in g.edges:
        if v < m and v - u == 1:
            colors.append(u % (r - 1) + 1)
        elif v == m - 1 and u == 0:
            colors.append((m - 1) % (r - 1) + 1)
        else:
            colors.append(r)
    return g, EdgeColoring(r, tuple(colors))


class TestKCanceling:
    def test_cyclic_k5_is_2_canceling(self):
        g, signs = cyclic_signs(5)
        assert is_k_canceling_signing(g, signs, 2).holds

    def test_cyclic_k4_is_not(self):
        g, signs = cyclic_signs(4)
        verdict = is_k_canceling_signing(g, signs, 2)
        assert not verdict.holds
        dead, u, v = verdict.certificate
        # the certificate must re-check as a genuine failure
        nn, ee, ss = naive.restrict(g.n, g.edges, signs, set(dead))
        remap = {}
        nxt = 0
        for w in range(g.n):
            if w not in dead:
                remap[w] = nxt
                nxt += 1
        assert naive.signed_distance(nn, ee, ss, remap[u], remap[v]) > 0

    def test_square_paths(self):
        for n in (5, 7, 8, 9):
            sq, signs = square_path_signs(n)
            assert is_k_canceling_signing(sq, signs, 1).holds

    def test_square_p6_fails_at_the_far_pair(self):
        sq, signs = square_path_signs(6)
        verdict = is_k_canceling_signing(sq, signs, 1)
        assert not verdict.holds
        assert verdict.certificate == ((), 0, 5)

    def test_hypothesis_violation(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            is_k_canceling_signing(g, (1, 1, 1), 3)
        with pytest.raises(ValueError):
            is_k_canceling_signing(g, (1, 1, 1), 0)

    def test_matches_literal_definition(self):
        rng = random.Random(61)
        for trial in range(15):
            n = rng.randint(3, 6)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph(n, [e for e in pairs if rng.random() < 0.7])
            signs = tuple(rng.choice((1, -1)) for _ in range(g.m))
            k = rng.randint(1, n - 1)
            got = is_k_canceling_signing(g, signs, k).holds
            assert got == naive.is_k_canceling(n, g.edges, signs, k)

    def test_witness_table(self):
        g, signs = cyclic_signs(5)
        verdict = is_k_canceling_signing(g, signs, 2, with_witnesses=True)
        assert verdict.witness_table is not None
        assert set(verdict.witness_table) == {
            (u, v) for u in range(5) for v in range(u + 1, 5)}
        for (u, v), w in verdict.witness_table.items():
            assert w.vertices[0] == u and w.vertices[-1] == v
            assert w.is_canceling()


class TestRkCanceling:
    def test_k6_three_colors(self):
        g, chi = kn_cycle_coloring(6, 3, 2)
        assert is_rk_canceling_coloring(g, chi, 2).holds

    def test_monochromatic_fails(self):
        g = path_graph(3)
        chi = EdgeColoring(2, (1, 1))
        verdict = is_rk_canceling_coloring(g, chi, 1)
        assert not verdict.holds
        assert verdict.certificate == ((), 0, 1)

    def test_k4_has_no_2_canceling_signing(self):
        g = complete_graph(4)
        for bits in itertools.product((1, -1), repeat=5):
            signs = (1,) + bits
            assert not is_rk_canceling_coloring(g, Signing(signs), 2).holds

    def test_matches_literal_oracle(self):
        rng = random.Random(67)
        for trial in range(10):
            n = rng.randint(3, 5)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph(n, [e for e in pairs if rng.random() < 0.8])
            chi = EdgeColoring(3, tuple(rng.randint(1, 3)
                                        for _ in range(g.m)))
            k = rng.randint(1, 3)
            got = is_rk_canceling_coloring(g, chi, k).holds
            assert got == naive.is_rk_canceling(n, g.edges, chi.colors, 3, k)

    def test_shortcut_probe_r2_always_agrees(self):
        rng = random.Random(71)
        for trial in range(10):
            n = rng.randint(4, 6)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph(n, [e for e in pairs if rng.random() < 0.75])
            signs = Signing(tuple(rng.choice((1, -1)) for _ in range(g.m)))
            k = rng.randint(2, 3)
            probe = rk_shortcut_agreement(g, signs, k)
            assert probe.agree

    def test_shortcut_probe_reports_both_verdicts(self):
        g, chi = kn_cycle_coloring(6, 3, 2)
        probe = rk_shortcut_agreement(g, chi, 2)
        assert probe.literal.holds and probe.agree


class TestNecessaryConditions:
    def test_cycle_fails_edge_count(self):
        rep = necessary_conditions(cycle_graph(11), 1)
        assert not rep.passes
        assert rep.failures() == ["edge count 11 < 13"]

    def test_k4_passes(self):
        rep = necessary_conditions(complete_graph(4), 1)
        assert rep.passes and rep.failures() == []

    def test_k5_passes_at_k2(self):
        rep = necessary_conditions(complete_graph(5), 2)
        assert rep.passes
        assert rep.required_edges == 10 and rep.required_min_degree == 3

    def test_individual_failures(self):
        rep = necessary_conditions(star_graph(5), 1)
        assert not rep.has_odd_cycle and not rep.min_degree_ok
        assert not rep.edge_count_ok and not rep.passes
        rep = necessary_conditions(cycle_graph(6), 1)
        assert rep.k_connected and not rep.has_odd_cycle
        rep = necessary_conditions(path_graph(4), 2)
        assert not rep.k_connected
        assert "not 2-connected" in rep.failures()

    def test_preconditions(self):
        with pytest.raises(ValueError):
            necessary_conditions(complete_graph(1), 1)
        with pytest.raises(ValueError):
            necessary_conditions(complete_graph(2), 2)

    def test_k1_formula_reduces(self):
        rep = necessary_conditions(complete_graph(6), 1)
        assert rep.required_edges == 6 + 2
        assert rep.required_min_degree == 2


class TestThetaRecognition:
    def test_four_path_shape(self):
        rec = theta_recognize(theta_graph([1, 2, 2, 3]))
        assert rec is not None
        assert rec.t == 4 and rec.endpoints == (0, 1)
        assert sorted(rec.lengths) == [1, 2, 2, 3]
        for p in rec.paths:
            assert p[0] == 0 and p[-1] == 1

    def test_cycle_is_two_paths(self):
        rec = theta_recognize(cycle_graph(7))
        assert rec.t == 2 and rec.endpoints == (0, 1)
        assert sorted(rec.lengths) == [1, 6]

    def test_scrambled_cycle(self):
        g = Graph(5, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)])
        rec = theta_recognize(g)
        assert rec is not None and rec.t == 2
        assert rec.endpoints == (0, 1)
        assert sorted(rec.lengths) == [2, 3]

    def test_k23(self):
        rec = theta_recognize(theta_graph([2, 2, 2]))
        assert rec.t == 3 and rec.lengths == (2, 2, 2)

    def test_non_theta(self):
        assert theta_recognize(complete_graph(4)) is None
        assert theta_recognize(path_graph(5)) is None
        glued = union_at_vertex(cycle_graph(3), cycle_graph(3), 0, 0)
        assert theta_recognize(glued) is None
        assert theta_recognize(Graph(4, [(0, 1), (2, 3)])) is None

    def test_reconstructs_generated_lengths(self):
        cases = [(1, 2, 2), (2, 2, 2), (1, 2, 2, 3), (3, 3, 4),
                 (2, 3, 4, 5), (1, 4), (2, 2)]
        for lengths in cases:
            rec = theta_recognize(theta_graph(lengths))
            assert rec is not None
            assert sorted(rec.lengths) == sorted(lengths)
            assert rec.t == len(lengths)

    def test_verdict(self):
        assert theta_verdict(cycle_graph(9)) is False
        assert theta_verdict(theta_graph([2, 2, 2])) is False
        assert theta_verdict(theta_graph([1, 2, 2, 3])) is None
        assert theta_verdict(complete_graph(4)) is None


class TestSoltes:
    def test_c11_classical(self):
        rep = soltes_check_classical(cycle_graph(11))
        assert rep.holds and rep.base == 165
        assert all(d == 165 for d in rep.deleted)

    def test_c9_classical_fails(self):
        rep = soltes_check_classical(cycle_graph(9))
        assert not rep.holds
        assert rep.base == 90 and rep.deleted[0] == 84

    def test_k5_classical_fails(self):
        rep = soltes_check_classical(complete_graph(5))
        assert not rep.holds and rep.base == 10
        assert set(rep.deleted) == {6}

    def test_signed_cyclic_k5(self):
        g, signs = cyclic_signs(5)
        rep = soltes_check_signed(g, signs)
        assert rep.holds and rep.base == 0
        assert set(rep.deleted) == {0}

    def test_signed_constant_reduces_to_classical(self):
        g = cycle_graph(11)
        rep = soltes_check_signed(g, Signing.constant(g.m))
        assert rep.holds and rep.base == 165

    def test_p3_fails_with_infinite_entry(self):
        rep = soltes_check_classical(path_graph(3))
        assert not rep.holds
        assert rep.base == 4 and math.inf in rep.deleted

    def test_infinite_equals_infinite(self):
        g = Graph(3, [(0, 1)])
        rep = soltes_check_classical(g)
        assert rep.base is math.inf
        assert rep.deleted[2] == 1
        assert not rep.holds
