"""Command-line front end.

A thin dispatcher: each subcommand loads its input, calls one library
entry point, prints a human summary or a key-value tree, and maps the
verdict to the exit code.  0 means the claim holds or a witness was
found, 1 means it fails or nothing was found (with a printed
certificate), 2 means usage, input, or guard errors.  Diagnostics go
to stderr; stdout carries only data.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .canceling import (
    is_k_canceling_signing,
    is_rk_canceling_coloring,
    necessary_conditions,
    soltes_check_classical,
    soltes_check_signed,
)
from .distances import (
    INFINITE,
    EdgeColoring,
    Signing,
    SizeGuardError,
    signed_distance_row,
    wiener_classical,
    wiener_signed,
)
from .graphs import (
    Graph,
    GraphFormatError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    make_family,
    parse_any,
    theta_graph,
)
from .reports import as_tree, render_kv
from .search import (
    connected_graphs,
    dyck_distribution,
    dyck_record,
    dyck_records,
    enumerate_trees,
    find_k_canceling_signing,
    min_signed_wiener,
    theta_length_tuples,
    threshold_scan,
    verify_double_star,
    verify_tree_sandwich,
)
from .witnesses import (
    SPECIAL_TAGS,
    Claim,
    SignedWitness,
    bipartite_clique_signing,
    blowup_cycle_signing,
    certify,
    complete_cyclic_signing,
    complete_rk_coloring,
    derive_special_witness,
    emit_witness,
    parse_witness,
    special_witness,
    square_cycle_signing,
    square_path_signing,
    square_tree_signing,
    subdivision_extend,
    union_signing,
)

CONSTRUCT_NAMES = (
    "square-path", "complete-cyclic", "square-tree", "square-cycle",
    "special", "subdivide", "union", "bipartite-cliques", "blowup",
    "complete-rk",
)

SUITE_NAMES = ("core", "exhaustive", "conjectures")


# ---------------------------------------------------------------------------
# input plumbing


@dataclass(frozen=True)
class LoadedInput:
    label: str
    graph: Graph
    signs: tuple[int, ...] | None
    colors: tuple[int, ...] | None
    claim: Claim | None


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def load_input(source: str) -> LoadedInput:
    """Resolve an input argument: a file path, '-' for stdin,
    family:NAME:P1,P2,..., or fixture:TAG."""
    if source.startswith("family:"):
        parts = source.split(":")
        if len(parts) != 3 or not parts[2]:
            raise ValueError("family inputs look like family:cycle:11")
        g = make_family(parts[1], parts[2].split(","))
        return LoadedInput(f"{parts[1]}({parts[2]})", g, None, None, None)
    if source.startswith("fixture:"):
        w = special_witness(source[len("fixture:"):])
        return LoadedInput(w.name, w.graph, w.signing.signs, None, w.claim)
    text = _read_source(source)
    parsed = parse_any(text)
    claim = None
    label = "stdin" if source == "-" else source
    if any(c.split(":", 1)[0].strip() == "claim" for c in parsed.comments):
        w = parse_witness(text)
        claim = w.claim
        label = w.name
    return LoadedInput(label, parsed.graph, parsed.signs, parsed.colors,
                       claim)


def load_witness(source: str) -> SignedWitness:
    """Like load_input but keeps the full witness; bare fixture tags
    are accepted as shorthand."""
    if source in SPECIAL_TAGS:
        return special_witness(source)
    if source.startswith("fixture:"):
        return special_witness(source[len("fixture:"):])
    return parse_witness(_read_source(source))


def _need_signs(inp: LoadedInput) -> tuple[int, ...]:
    if inp.signs is None:
        raise ValueError(f"input {inp.label} carries no edge signs")
    return inp.signs


def _need_colors(inp: LoadedInput) -> tuple[int, ...]:
    if inp.colors is None:
        raise ValueError(f"input {inp.label} carries no edge colors")
    return inp.colors


# ---------------------------------------------------------------------------
# output plumbing


def _fmt(value) -> str:
    return "inf" if value == INFINITE else str(value)


def _emit(args, tree: dict, lines) -> None:
    if args.format == "kv":
        sys.stdout.write(render_kv(tree))
    else:
        for line in lines:
            print(line)


def _certificate_line(certificate) -> str:
    deleted, u, v = certificate
    return f"certificate: delete {list(deleted)}, pair ({u},{v})"


def _warn_guard(args) -> None:
    if args.max_n is not None or args.max_edges is not None:
        print("guard override in effect; this may take a long time",
              file=sys.stderr)


def _max_bits(args):
    if args.max_edges is None:
        return None
    return max(args.max_edges - 1, 0)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_dist(args) -> int:
    inp = load_input(args.input)
    signs = _need_signs(inp)
    _warn_guard(args)
    d = signed_distance_row(inp.graph, signs, args.u,
                            max_n=args.max_n)[args.v]
    _emit(args, {"u": args.u, "v": args.v, "distance": d},
          [f"d({args.u},{args.v}) = {_fmt(d)}"])
    return 0


def _cmd_wiener(args) -> int:
    inp = load_input(args.input)
    _warn_guard(args)
    if inp.signs is not None and not args.classical:
        value = wiener_signed(inp.graph, inp.signs, max_n=args.max_n)
        kind = "signed"
    else:
        value = wiener_classical(inp.graph)
        kind = "classical"
    _emit(args, {"kind": kind, "value": value},
          [f"{kind} wiener = {_fmt(value)}"])
    return 0


def _cmd_check(args) -> int:
    inp = load_input(args.input)
    signs = _need_signs(inp)
    _warn_guard(args)
    verdict = is_k_canceling_signing(inp.graph, signs, args.k,
                                     max_n=args.max_n)
    tree = {"k": args.k} | as_tree(verdict)
    lines = [f"{args.k}-canceling: {'yes' if verdict.holds else 'no'}"]
    if verdict.certificate is not None:
        lines.append(_certificate_line(verdict.certificate))
    _emit(args, tree, lines)
    return 0 if verdict.holds else 1


def _cmd_check_colored(args) -> int:
    inp = load_input(args.input)
    colors = _need_colors(inp)
    _warn_guard(args)
    coloring = EdgeColoring(args.r, colors)
    verdict = is_rk_canceling_coloring(inp.graph, coloring, args.k,
                                       max_n=args.max_n)
    tree = {"r": args.r, "k": args.k} | as_tree(verdict)
    lines = [f"({args.r},{args.k})-canceling: "
             f"{'yes' if verdict.holds else 'no'}"]
    if verdict.certificate is not None:
        lines.append(_certificate_line(verdict.certificate))
    _emit(args, tree, lines)
    return 0 if verdict.holds else 1


def _cmd_filter(args) -> int:
    inp = load_input(args.input)
    report = necessary_conditions(inp.graph, args.k)
    tree = as_tree(report)
    tree["min_degree_ok"] = report.min_degree_ok
    tree["edge_count_ok"] = report.edge_count_ok
    tree["passes"] = report.passes
    if report.passes:
        lines = ["passes all necessary conditions"]
    else:
        lines = ["fails: " + "; ".join(report.failures())]
    _emit(args, tree, lines)
    return 0 if report.passes else 1


def _build_construction(name: str, params) -> SignedWitness:
    def ints(count: int) -> list[int]:
        if len(params) != count:
            raise ValueError(f"{name} takes {count} parameter(s)")
        return [int(p) for p in params]

    if name == "square-path":
        return square_path_signing(*ints(1))
    if name == "complete-cyclic":
        return complete_cyclic_signing(*ints(1))
    if name == "square-cycle":
        return square_cycle_signing(*ints(1))
    if name == "square-tree":
        if len(params) != 1:
            raise ValueError("square-tree takes one input source")
        return square_tree_signing(load_input(params[0]).graph)
    if name == "special":
        if len(params) != 1:
            raise ValueError("special takes one fixture tag")
        return special_witness(params[0])
    if name == "subdivide":
        if len(params) != 3:
            raise ValueError("subdivide takes SOURCE EDGE I")
        w = load_witness(params[0])
        edge = w.designated_edge if params[1] == "designated" \
            else int(params[1])
        if edge is None:
            raise ValueError(f"{w.name} has no designated edge")
        return subdivision_extend(w, edge, int(params[2]))
    if name == "union":
        if len(params) != 4:
            raise ValueError("union takes SOURCE SOURCE V1 V2")
        return union_signing(load_witness(params[0]),
                             load_witness(params[1]),
                             int(params[2]), int(params[3]))
    if name == "bipartite-cliques":
        if len(params) != 2:
            raise ValueError("bipartite-cliques takes SOURCE K")
        return bipartite_clique_signing(load_input(params[0]).graph,
                                       int(params[1]))
    if name == "blowup":
        if len(params) < 3:
            raise ValueError("blowup takes T K SIZE...")
        return blowup_cycle_signing(int(params[0]),
                                    [int(p) for p in params[2:]],
                                    int(params[1]))
    if name == "complete-rk":
        return complete_rk_coloring(*ints(3))
    raise ValueError(f"unknown construction {name!r}")


def _cmd_construct(args) -> int:
    w = _build_construction(args.name, args.params)
    text = emit_witness(w)
    sys.stdout.write(text)
    if args.emit_witness:
        with open(args.emit_witness, "w") as fh:
            fh.write(text)
    return 0


def _cmd_search(args) -> int:
    inp = load_input(args.input)
    _warn_guard(args)
    result = find_k_canceling_signing(inp.graph, args.k,
                                      use_filter=not args.no_filter,
                                      max_bits=_max_bits(args),
                                      max_n=args.max_n)
    tree = {"k": args.k, "found": result.found,
            "examined": result.examined,
            "symmetry_factor": result.symmetry_factor,
            "filtered": result.filtered}
    if result.found:
        tree["witness"] = as_tree(result.witness)
        signs = " ".join(str(s) for s in result.witness.signs)
        lines = [f"found a {args.k}-canceling signing after "
                 f"{result.examined} candidate(s)",
                 f"signs: {signs}"]
        if args.emit_witness:
            w = SignedWitness("search-result", inp.graph,
                              Claim("k-canceling", k=args.k),
                              signing=result.witness)
            with open(args.emit_witness, "w") as fh:
                fh.write(emit_witness(w))
    elif result.filtered:
        lines = ["no signing: necessary conditions already fail"]
    else:
        lines = [f"no signing among {result.examined} candidates "
                 f"(x{result.symmetry_factor} by negation)"]
    _emit(args, tree, lines)
    return 0 if result.found else 1


def _cmd_min_wiener(args) -> int:
    inp = load_input(args.input)
    _warn_guard(args)
    result = min_signed_wiener(inp.graph, max_bits=_max_bits(args),
                               max_n=args.max_n)
    lines = [f"minimum signed wiener = {_fmt(result.value)} "
             f"(examined {result.examined})"]
    if result.argmin is not None:
        lines.append("signs: " + " ".join(str(s)
                                          for s in result.argmin.signs))
    _emit(args, as_tree(result), lines)
    return 0


def _cmd_threshold(args) -> int:
    _warn_guard(args)
    rows = threshold_scan(args.r, args.k,
                          range(args.n_from, args.n_to + 1),
                          max_bits=_max_bits(args), max_n=args.max_n,
                          workers=args.threads)
    tree = {"r": args.r, "k": args.k,
            "rows": [as_tree(row) for row in rows]}
    lines = [f"n={row.n}: "
             f"{'canceling' if row.holds else 'not canceling'} "
             f"(examined {row.examined})" for row in rows]
    _emit(args, tree, lines)
    return 0


def _cmd_trees(args) -> int:
    if args.conjecture == "sandwich":
        report = verify_tree_sandwich(args.n, workers=args.threads)
        ok = report.lower_holds and report.upper_holds
        lines = [
            f"n={args.n}: lower bound "
            f"{'holds' if report.lower_holds else 'fails'}, upper bound "
            f"{'holds' if report.upper_holds else 'fails'}",
            f"anchors: alternating path {report.alternating_anchor}, "
            f"classical path {report.classical_anchor}",
            f"checked {report.trees_checked} trees, "
            f"{report.signings_checked} signings",
        ]
    else:
        report = verify_double_star(args.n, workers=args.threads)
        ok = report.lower_holds and report.upper_holds
        a, b = report.best_double_star
        lines = [
            f"n={args.n}: lower bound "
            f"{'holds' if report.lower_holds else 'fails'}, upper bound "
            f"{'holds' if report.upper_holds else 'fails'}",
            f"path value {report.path_value}, best double star "
            f"D({a},{b}) value {report.best_double_star_value}, "
            f"star value {report.star_value}",
            f"star-only upper bound "
            f"{'holds' if report.star_only_upper_holds else 'fails'}",
        ]
    _emit(args, as_tree(report), lines)
    return 0 if ok else 1


def _cmd_dyck(args) -> int:
    distribution = dyck_distribution(args.n)
    rows = [{"wiener": w, "count": c} for w, c in distribution.items()]
    total = sum(distribution.values())
    tree = {"n": args.n, "total": total, "rows": rows}
    lines = ["wiener  count"]
    lines += [f"{w:6d}  {c}" for w, c in distribution.items()]
    _emit(args, tree, lines)
    return 0


def _cmd_soltes(args) -> int:
    inp = load_input(args.input)
    if args.signed:
        signs = _need_signs(inp)
        _warn_guard(args)
        report = soltes_check_signed(inp.graph, signs, max_n=args.max_n)
    else:
        report = soltes_check_classical(inp.graph)
    lines = [f"W = {_fmt(report.base)}"]
    lines += [f"W(G-{v}) = {_fmt(value)}" for v, value in report.table()]
    lines.append("deletion-invariant: "
                 f"{'yes' if report.holds else 'no'}")
    _emit(args, as_tree(report), lines)
    return 0 if report.holds else 1


# ---------------------------------------------------------------------------
# reproduction suites: named bundles of the toolkit's headline checks,
# each returning per-check pass/fail so a failed run pinpoints itself


def _check_square_paths():
    results = [certify(square_path_signing(n)) for n in range(2, 13)]
    ok = all(r.ok for r in results)
    return ok, f"{len(results)} claims certified (n=2..12, n=6 boundary)"


def _check_complete_cyclic():
    results = [certify(complete_cyclic_signing(n)) for n in range(3, 11)]
    ok = all(r.ok for r in results)
    return ok, f"{len(results)} claims certified (n=3..10)"


def _check_k4_exhaustive():
    result = find_k_canceling_signing(complete_graph(4), 2,
                                      use_filter=False)
    return (not result.found,
            f"no 2-canceling signing among {result.examined} candidates")


def _check_fixture_rederivation():
    ok = True
    for tag in ("c7sq", "p6sq"):
        stored, fresh = special_witness(tag), derive_special_witness(tag)
        ok = ok and emit_witness(stored) == emit_witness(fresh)
    return ok, "stored fixtures equal fresh search output"


def _check_fixture_recertification():
    results = [certify(special_witness(tag)) for tag in SPECIAL_TAGS]
    return all(r.ok for r in results), f"{len(results)} fixtures certified"


def _check_subdivision_chain():
    even = special_witness("g_small_even")
    odd = special_witness("g_small_odd")
    sizes = []
    ok = True
    for seed, irange in ((odd, range(0, 3)), (even, range(1, 4))):
        for i in irange:
            w = subdivision_extend(seed, seed.designated_edge, i)
            good = (certify(w).ok and w.graph.m == w.graph.n + 2
                    and min(w.graph.degree(v)
                            for v in range(w.graph.n)) == 2)
            ok = ok and good
            sizes.append(w.graph.n)
    return ok and sorted(sizes) == [5, 6, 7, 8, 9, 10], \
        "n=5..10 with n+2 edges and min degree 2"


def _check_union():
    t4 = special_witness("theta4")
    u1 = union_signing(t4, t4, 4, 4)
    u2 = union_signing(special_witness("g_small_even"),
                       special_witness("g_small_odd"), 0, 0)
    ok = certify(u1).ok and certify(u2).ok
    return ok, "two one-point unions certified"


def _check_bipartite_cliques():
    a = certify(bipartite_clique_signing(complete_bipartite_graph(3, 3), 1))
    b = certify(bipartite_clique_signing(complete_bipartite_graph(4, 4), 2))
    return a.ok and b.ok, "K_6 (k=1) and K_8 (k=2) forms certified"


def _check_blowups():
    a = certify(blowup_cycle_signing(1, (2, 2, 2), 1))
    b = certify(blowup_cycle_signing(1, (4, 4, 4), 2))
    return a.ok and b.ok, "triangle blowups (2,2,2) and (4,4,4) certified"


def _check_complete_rk_small():
    a = certify(complete_rk_coloring(6, 3, 2))
    b = certify(complete_rk_coloring(7, 3, 2))
    return a.ok and b.ok, "3-colorings of K_6 and K_7 certified for k=2"


def _check_tree_squares():
    count = 0
    for n in range(5, 9):
        for record in enumerate_trees(n):
            if not certify(square_tree_signing(record.tree)).ok:
                return False, f"failed on a tree with {n} vertices"
            count += 1
    return True, f"{count} tree squares certified (n=5..8)"


def _check_soltes_cycles():
    expected = {n: n == 11 for n in range(5, 14)}
    for n, want in expected.items():
        if soltes_check_classical(cycle_graph(n)).holds != want:
            return False, f"unexpected verdict at C_{n}"
    return True, "deletion-invariance exactly at C_11 among C_5..C_13"


def _check_thresholds():
    expect = [(1, {2: False, 3: False, 4: True, 5: True}),
              (2, {3: False, 4: False, 5: True, 6: True}),
              (3, {4: False, 5: False, 6: False, 7: True})]
    for k, per_n in expect:
        rows = threshold_scan(2, k, sorted(per_n))
        for row in rows:
            if row.holds != per_n[row.n]:
                return False, f"k={k}, n={row.n} disagrees"
    return True, "first 2-signing thresholds at n=4, 5, 7"


def _check_connected_sweep():
    canceling_passes = True
    tight = {5: False, 6: False}
    graphs = 0
    for n in range(2, 7):
        for g in connected_graphs(n):
            graphs += 1
            result = find_k_canceling_signing(g, 1, use_filter=False)
            if not result.found:
                continue
            if not necessary_conditions(g, 1).passes:
                canceling_passes = False
            if n in tight and g.m == n + 2 and \
                    min(g.degree(v) for v in range(n)) == 2:
                tight[n] = True
    ok = canceling_passes and all(tight.values())
    return ok, (f"{graphs} graphs swept; conditions necessary; "
                "tight examples at n=5,6")


def _check_theta_small():
    for lengths in theta_length_tuples(3, 10):
        if find_k_canceling_signing(theta_graph(lengths), 1,
                                    use_filter=False).found:
            return False, f"theta{lengths} unexpectedly cancels"
    t4 = certify(special_witness("theta4"))
    return t4.ok, "no theta with t<=3 within 10 edges cancels; t=4 does"


def _check_complete_rk_large():
    result = certify(complete_rk_coloring(12, 3, 3))
    return result.ok, "3-colored K_12 certified for k=3"


def _check_sandwich():
    for n in range(2, 10):
        report = verify_tree_sandwich(n)
        if not (report.lower_holds and report.upper_holds):
            return False, f"fails at n={n}"
    return True, "alternating-path lower and path upper bounds, n<=9"


def _check_double_star():
    first_star_failure = None
    for n in range(2, 10):
        report = verify_double_star(n)
        if not (report.lower_holds and report.upper_holds):
            return False, f"double-star bound fails at n={n}"
        if not report.star_only_upper_holds and first_star_failure is None:
            first_star_failure = n
    return first_star_failure == 8, \
        "bounds hold for n<=9; star-only variant first fails at n=8"


def _check_dyck():
    catalan = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132}
    for n, count in catalan.items():
        records = dyck_records(n)
        if len(records) != count:
            return False, f"count mismatch at n={n}"
        if any(r.wiener % 2 for r in records):
            return False, f"odd index at n={n}"
    if dyck_record("UDUUDUDD").wiener != 32:
        return False, "fixed 8-step record disagrees"
    return True, "Catalan counts, even indices, fixed 8-step value"


_SUITES = {
    "core": (
        ("square-path-family", _check_square_paths),
        ("complete-cyclic-family", _check_complete_cyclic),
        ("k4-exhaustive-negative", _check_k4_exhaustive),
        ("fixture-rederivation", _check_fixture_rederivation),
        ("fixture-recertification", _check_fixture_recertification),
        ("subdivision-chain", _check_subdivision_chain),
        ("union-composition", _check_union),
        ("bipartite-cliques", _check_bipartite_cliques),
        ("blowup-cycles", _check_blowups),
        ("complete-rk-small", _check_complete_rk_small),
        ("tree-squares", _check_tree_squares),
        ("soltes-cycles", _check_soltes_cycles),
    ),
    "exhaustive": (
        ("signed-thresholds", _check_thresholds),
        ("connected-sweep", _check_connected_sweep),
        ("theta-small", _check_theta_small),
        ("complete-rk-large", _check_complete_rk_large),
    ),
    "conjectures": (
        ("tree-sandwich", _check_sandwich),
        ("double-star-bounds", _check_double_star),
        ("alternating-paths", _check_dyck),
    ),
}


def _cmd_reproduce(args) -> int:
    checks = _SUITES[args.suite]
    rows = []
    all_ok = True
    for label, thunk in checks:
        ok, note = thunk()
        all_ok = all_ok and ok
        rows.append({"check": label, "ok": ok})
        if args.format != "kv":
            print(f"{'PASS' if ok else 'FAIL'} {label}: {note}")
    if args.format == "kv":
        sys.stdout.write(render_kv({"suite": args.suite, "rows": rows,
                                    "ok": all_ok}))
    else:
        print(f"{args.suite}: {'all checks passed' if all_ok else 'FAILED'}")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default="text",
                        help="human text or line-oriented key-value output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker process cap for scans")
    common.add_argument("--max-n", type=int, default=None,
                        help="override the vertex-count size guard")
    common.add_argument("--max-edges", type=int, default=None,
                        help="override the exhaustive-search width guard")

    parser = argparse.ArgumentParser(
        prog="signedwiener",
        description="Signed distances, canceling signings and colorings, "
                    "and the exhaustive searches behind them.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    def add(name, func, help_text, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("dist", _cmd_dist, "signed distance between two vertices")
    p.add_argument("input", help="signed graph: file, '-', or fixture:TAG")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)

    p = add("wiener", _cmd_wiener, "signed or classical wiener index")
    p.add_argument("input")
    p.add_argument("--classical", action="store_true",
                   help="ignore signs and use hop distances")

    p = add("check", _cmd_check, "verify a k-canceling signing")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)

    p = add("check-colored", _cmd_check_colored,
            "verify an (r,k)-canceling coloring")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("filter", _cmd_filter,
            "structural conditions necessary for k-canceling")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=1)

    p = add("construct", _cmd_construct,
            "emit a named witness in the fixture format")
    p.add_argument("name", choices=CONSTRUCT_NAMES, metavar="NAME")
    p.add_argument("params", nargs="*", metavar="PARAM")
    p.add_argument("--emit-witness", metavar="FILE",
                   help="also write the witness to FILE")

    p = add("search", _cmd_search, "find a k-canceling signing")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--no-filter", action="store_true",
                   help="skip the necessary-condition fast reject")
    p.add_argument("--emit-witness", metavar="FILE",
                   help="write any found witness to FILE")

    p = add("min-wiener", _cmd_min_wiener,
            "minimize the signed wiener index over signings")
    p.add_argument("input")

    p = add("threshold", _cmd_threshold,
            "per-n canceling verdicts for complete graphs")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)

    p = add("trees", _cmd_trees, "scan all trees of one size")
    p.add_argument("--conjecture", choices=("sandwich", "double-star"),
                   required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("dyck", _cmd_dyck,
            "index distribution of balanced alternating paths")
    p.add_argument("--n", type=int, required=True,
                   help="semilength (path has 2n edges)")

    p = add("soltes", _cmd_soltes,
            "is the wiener index invariant under every vertex deletion")
    p.add_argument("input")
    p.add_argument("--signed", action="store_true",
                   help="use the input's signs instead of hop distances")

    p = add("reproduce", _cmd_reproduce, "run a named verification suite")
    p.add_argument("suite", choices=SUITE_NAMES, metavar="SUITE")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
