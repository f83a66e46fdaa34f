"""Key-value rendering and its round-trip guarantee."""

import math

import pytest

from signedwiener.canceling import (
    necessary_conditions,
    soltes_check_classical,
)
from signedwiener.distances import Signing
from signedwiener.graphs import cycle_graph, path_graph
from signedwiener.reports import (
    as_tree,
    parse_kv,
    parse_token,
    render_kv,
    scalar_token,
)
from signedwiener.search import min_signed_wiener, n2k_bounds
from signedwiener.witnesses import certify, square_path_signing


class TestTokens:
    def test_scalars(self):
        assert scalar_token(True) == "true"
        assert scalar_token(False) == "false"
        assert scalar_token(None) == "none"
        assert scalar_token(math.inf) == "inf"
        assert scalar_token(-3) == "-3"
        assert scalar_token("square-path-6") == "square-path-6"

    def test_inverse(self):
        for value in (True, False, None, math.inf, 0, -7, 41, "UDUD"):
            assert parse_token(scalar_token(value)) == value

    def test_rejects_unrepresentable(self):
        with pytest.raises(ValueError):
            scalar_token("two words")
        with pytest.raises(ValueError):
            scalar_token("")
        with pytest.raises(ValueError):
            scalar_token("a=b")
        with pytest.raises(ValueError):
            scalar_token(math.nan)


class TestRender:
    def test_nested_paths(self):
        text = render_kv({"a": {"b": 1, "c": True}, "d": "x"})
        assert text == "a.b = 1\na.c = true\nd = x\n"

    def test_list_of_records(self):
        text = render_kv({"rows": [{"n": 2, "ok": False},
                                   {"n": 3, "ok": True}]})
        assert "rows.0.n = 2" in text
        assert "rows.1.ok = true" in text

    def test_leaf_lists(self):
        assert render_kv({"signs": [1, -1, 1]}) == "signs = [1 -1 1]\n"
        assert render_kv({"s": []}) == "s = []\n"

    def test_empty_mapping_rejected(self):
        with pytest.raises(ValueError):
            render_kv({"a": {}})

    def test_dotted_key_rejected(self):
        with pytest.raises(ValueError):
            render_kv({"a.b": 1})


class TestParse:
    def test_round_trip_mixed(self):
        tree = {
            "holds": True,
            "base": math.inf,
            "certificate": {"s": [0, 2], "u": 1, "v": 4},
            "rows": [{"n": 2, "holds": False}, {"n": 3, "holds": True}],
            "signs": [1, -1],
            "empty": [],
            "name": "threshold-scan",
        }
        assert parse_kv(render_kv(tree)) == tree

    def test_blank_and_comment_lines_skipped(self):
        assert parse_kv("# note\n\nvalue = 3\n") == {"value": 3}

    def test_malformed_line(self):
        with pytest.raises(ValueError, match="malformed"):
            parse_kv("justakey\n")

    def test_duplicate_path(self):
        with pytest.raises(ValueError, match="duplicate"):
            parse_kv("a = 1\na = 2\n")

    def test_leaf_collision(self):
        with pytest.raises(ValueError, match="descends"):
            parse_kv("a = 1\na.b = 2\n")


class TestReportTrees:
    def test_necessary_report(self):
        tree = as_tree(necessary_conditions(cycle_graph(11), 1))
        assert tree["edge_count"] == 11
        assert tree["required_edges"] == 13
        assert parse_kv(render_kv(tree)) == tree

    def test_soltes_report_with_inf(self):
        report = soltes_check_classical(path_graph(3))
        tree = as_tree(report)
        assert tree["deleted"] == [1, math.inf, 1]
        assert parse_kv(render_kv(tree)) == tree

    def test_min_wiener_result(self):
        tree = as_tree(min_signed_wiener(path_graph(3)))
        assert tree["value"] == 2
        assert tree["argmin"] == {"signs": [1, -1]}
        assert parse_kv(render_kv(tree)) == tree

    def test_threshold_bounds_keeps_float_diagnostic(self):
        tree = as_tree(n2k_bounds(16))
        assert tree["lower"] == 18
        assert tree["lower_exact"] == 18.0
        assert parse_kv(render_kv(tree)) == tree

    def test_certification_with_graph(self):
        w = square_path_signing(6)
        tree = {"witness": {"name": w.name, "graph": as_tree(w.graph),
                            "signing": as_tree(w.signing)},
                "result": as_tree(certify(w))}
        again = parse_kv(render_kv(tree))
        assert again == tree
        assert again["witness"]["graph"]["edges"][0] == [0, 1]

    def test_signing_round_trip_types(self):
        tree = as_tree(Signing((1, -1)))
        assert parse_kv(render_kv(tree)) == {"signs": [1, -1]}
