"""Decision procedures for canceling structures.

Verifies k-canceling signings and (r,k)-canceling colorings, applies
the structural necessary-condition filter, recognizes generalized theta
graphs, and runs Wiener-invariance-under-vertex-deletion checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .distances import (
    EdgeColoring,
    PathWitness,
    Signing,
    canceling_path_witness,
    canceling_reach_row,
    signed_distance_row,
    wiener_classical,
    wiener_signed,
    zero_reach_row,
)
from .graphs import Graph, delete_vertices, is_k_connected, structural_report

# per-pair witness tables are an audit aid, not a scaling target
WITNESS_TABLE_MAX_N = 14


@dataclass(frozen=True)
class CancelingVerdict:
    """Outcome of a canceling check.

    On failure, certificate is the first failing (deleted set, u, v) in
    size-then-lex order, in host-graph vertex ids.  On success a
    per-pair table of canceling paths for the undeleted graph can be
    attached (size-gated).
    """

    holds: bool
    certificate: tuple[tuple[int, ...], int, int] | None = None
    witness_table: dict[tuple[int, int], PathWitness] | None = None


def _as_signing(signing) -> Signing:
    return signing if isinstance(signing, Signing) else Signing(tuple(signing))


def _as_coloring(coloring) -> EdgeColoring:
    if isinstance(coloring, EdgeColoring):
        return coloring
    if isinstance(coloring, Signing):
        return coloring.as_coloring()
    raise TypeError("expected an EdgeColoring or Signing")


def _build_witness_table(g: Graph, coloring: EdgeColoring, max_n):
    if g.n > WITNESS_TABLE_MAX_N:
        return None
    table = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            w = canceling_path_witness(g, coloring, u, v, max_n=max_n)
            if w is None:
                return None
            table[(u, v)] = w
    return table


def _check_deletions(g: Graph, coloring: EdgeColoring, sizes, *, max_n):
    """Certificate of the first pair with no canceling path after
    deleting a set whose size runs over `sizes`; None if all pairs
    cancel.  Deletion sets enumerate in size-then-lex order."""
    for size in sizes:
        if size >= g.n:
            continue
        for dead in combinations(range(g.n), size):
            sub = delete_vertices(g, dead)
            restricted = EdgeColoring(
                coloring.r,
                tuple(coloring.colors[j] for j in sub.edge_refs))
            back = {new: old for old, new in sub.vertex_map.items()}
            for u in range(sub.graph.n):
                row = canceling_reach_row(sub.graph, restricted, u,
                                          max_n=max_n)
                for v in range(u + 1, sub.graph.n):
                    if not row[v]:
                        return dead, back[u], back[v]
    return None


def is_k_canceling_signing(g: Graph, signing, k: int, *,
                           max_n: int | None = None,
                           with_witnesses: bool = False) -> CancelingVerdict:
    """Decide whether a signing is k-canceling.

    Only deletion sets of size exactly k-1 are examined: with at least
    k+1 vertices, zero signed Wiener after every (k-1)-set deletion is
    equivalent to the definition's "all sets smaller than k", because
    dropping a vertex from the deleted set leaves its canceling paths
    intact.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n <= k:
        raise ValueError(
            f"k-canceling check needs n >= k+1 (n={g.n}, k={k})")
    coloring = _as_signing(signing).as_coloring()
    cert = _check_deletions(g, coloring, [k - 1], max_n=max_n)
    if cert is not None:
        return CancelingVerdict(False, cert)
    table = None
    if with_witnesses:
        table = _build_witness_table(g, coloring, max_n)
    return CancelingVerdict(True, witness_table=table)


def is_rk_canceling_coloring(g: Graph, coloring, k: int, *,
                             max_n: int | None = None,
                             with_witnesses: bool = False
                             ) -> CancelingVerdict:
    """Decide whether a coloring is (r,k)-canceling, checking every
    deletion set of size less than k literally.

    The size-(k-1)-only shortcut is justified for signings but is not
    restated for r >= 3, so this checker does not assume it; see
    rk_shortcut_agreement for the empirical probe.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    chi = _as_coloring(coloring)
    cert = _check_deletions(g, chi, range(k), max_n=max_n)
    if cert is not None:
        return CancelingVerdict(False, cert)
    table = None
    if with_witnesses:
        table = _build_witness_table(g, chi, max_n)
    return CancelingVerdict(True, witness_table=table)


@dataclass(frozen=True)
class ShortcutProbe:
    """Literal all-sizes verdict vs the size-(k-1)-only check."""

    literal: CancelingVerdict
    last_size_only: CancelingVerdict
    agree: bool


def rk_shortcut_agreement(g: Graph, coloring, k: int, *,
                          max_n: int | None = None) -> ShortcutProbe:
    """Probe whether checking only size-(k-1) deletions would have
    given the same (r,k) verdict."""
    chi = _as_coloring(coloring)
    literal = is_rk_canceling_coloring(g, chi, k, max_n=max_n)
    cert = _check_deletions(g, chi, [k - 1], max_n=max_n)
    shortcut = (CancelingVerdict(True) if cert is None
                else CancelingVerdict(False, cert))
    return ShortcutProbe(literal, shortcut, literal.holds == shortcut.holds)


@dataclass(frozen=True)
class NecessaryReport:
    """Structural conditions every k-canceling graph must satisfy.

    Passing is necessary, never sufficient.  The k=1 case asks for a
    connected graph with an odd cycle, minimum degree 2, and at least
    n+2 edges; general k raises these to k-connected, degree k+1, and
    n + k(k-1)/2 + 2k edges.
    """

    k: int
    k_connected: bool
    has_odd_cycle: bool
    min_degree: int
    required_min_degree: int
    edge_count: int
    required_edges: int

    @property
    def min_degree_ok(self) -> bool:
        return self.min_degree >= self.required_min_degree

    @property
    def edge_count_ok(self) -> bool:
        return self.edge_count >= self.required_edges

    @property
    def passes(self) -> bool:
        return (self.k_connected and self.has_odd_cycle
                and self.min_degree_ok and self.edge_count_ok)

    def failures(self) -> list[str]:
        out = []
        if not self.k_connected:
            out.append("not connected" if self.k == 1
                       else f"not {self.k}-connected")
        if not self.has_odd_cycle:
            out.append("no odd cycle")
        if not self.min_degree_ok:
            out.append(f"minimum degree {self.min_degree} < "
                       f"{self.required_min_degree}")
        if not self.edge_count_ok:
            out.append(f"edge count {self.edge_count} < "
                       f"{self.required_edges}")
        return out


def necessary_conditions(g: Graph, k: int = 1) -> NecessaryReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n < max(2, k + 1):
        raise ValueError(
            f"necessary-condition filter needs n >= {max(2, k + 1)}")
    report = structural_report(g)
    return NecessaryReport(
        k=k,
        k_connected=is_k_connected(g, k),
        has_odd_cycle=report.has_odd_cycle,
        min_degree=report.min_degree,
        required_min_degree=k + 1,
        edge_count=g.m,
        required_edges=g.n + k * (k - 1) // 2 + 2 * k,
    )


@dataclass(frozen=True)
class ThetaDecomposition:
    """t internally disjoint paths sharing endpoints x and y."""

    t: int
    endpoints: tuple[int, int]
    lengths: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def _walk_chain(g: Graph, x: int, first: int, stops: set[int]):
    """Follow the degree-2 chain from x through first until a stop
    vertex; None if the walk revisits or meets a branch vertex."""
    path = [x, first]
    prev, cur = x, first
    while cur not in stops:
        if g.degree(cur) != 2:
            return None
        a, b = g.neighbors(cur)
        nxt = b if a == prev else a
        if nxt in path and nxt not in stops:
            return None
        path.append(nxt)
        prev, cur = cur, nxt
    return tuple(path)


def theta_recognize(g: Graph) -> ThetaDecomposition | None:
    """Decompose g into internally disjoint same-endpoint paths.

    Recognizes exactly the graphs formed by t >= 2 such paths.  A bare
    cycle is the t=2 case; its endpoints canonicalize to the two
    smallest vertex indices.  Paths are reported in ascending order of
    their first step out of x.
    """
    report = structural_report(g)
    if not report.connected or g.n < 3:
        return None
    degrees = [g.degree(v) for v in range(g.n)]
    branch = [v for v in range(g.n) if degrees[v] > 2]
    if not branch:
        if any(d != 2 for d in degrees):
            return None
        # a cycle; split it at the two smallest indices
        x, y = 0, 1
        paths = []
        for first in g.neighbors(x):
            p = _walk_chain(g, x, first, {y})
            if p is None:
                return None
            paths.append(p)
        paths.sort(key=lambda p: p[1])
        return ThetaDecomposition(2, (x, y),
                                  tuple(len(p) - 1 for p in paths),
                                  tuple(paths))
    if len(branch) != 2:
        return None
    x, y = branch
    t = degrees[x]
    if degrees[y] != t:
        return None
    paths = []
    seen_internal = set()
    for first in sorted(g.neighbors(x)):
        p = _walk_chain(g, x, first, {y})
        if p is None or p[-1] != y:
            return None
        internal = set(p[1:-1])
        if internal & seen_internal:
            return None
        seen_internal |= internal
        paths.append(p)
    if len(seen_internal) != g.n - 2:
        return None
    if sum(len(p) - 1 for p in paths) != g.m:
        return None
    return ThetaDecomposition(t, (x, y),
                              tuple(len(p) - 1 for p in paths),
                              tuple(paths))


def theta_verdict(g: Graph) -> bool | None:
    """False when g is a <= 3-path theta graph (such graphs admit no
    canceling signing); None when this filter cannot decide."""
    rec = theta_recognize(g)
    if rec is not None and rec.t <= 3:
        return False
    return None


@dataclass(frozen=True)
class SoltesReport:
    """Wiener value of the graph and of every one-vertex deletion."""

    holds: bool
    base: object
    deleted: tuple

    def table(self) -> list[tuple[int, object]]:
        return list(enumerate(self.deleted))


def soltes_check_classical(g: Graph) -> SoltesReport:
    """Whether classical Wiener is invariant under every single-vertex
    deletion.  Infinite on both sides counts as equal."""
    if g.n < 2:
        raise ValueError("deletion check needs n >= 2")
    base = wiener_classical(g)
    deleted = tuple(wiener_classical(delete_vertices(g, {v}).graph)
                    for v in range(g.n))
    return SoltesReport(all(d == base for d in deleted), base, deleted)


def soltes_check_signed(g: Graph, signing, *,
                        max_n: int | None = None) -> SoltesReport:
    """Signed-Wiener variant of the single-vertex-deletion check, with
    the signing restricted to each surviving edge set."""
    if g.n < 2:
        raise ValueError("deletion check needs n >= 2")
    signs = _as_signing(signing).signs
    if len(signs) != g.m:
        raise ValueError("signing does not fit graph")
    base = wiener_signed(g, signs, max_n=max_n)
    deleted = []
    for v in range(g.n):
        sub = delete_vertices(g, {v})
        sub_signs = tuple(signs[j] for j in sub.edge_refs)
        deleted.append(wiener_signed(sub.graph, sub_signs, max_n=max_n))
    deleted = tuple(deleted)
    return SoltesReport(all(d == base for d in deleted), base, deleted)
