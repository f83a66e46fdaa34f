"""Exhaustive search and enumeration drivers.

Existence searches for canceling signings and colorings, the minimum
signed Wiener index with its argmin, per-n cancelability of complete
graphs, tree scans for the sandwich and double-star conjectures, and
the signed Wiener distribution of Dyck paths.

Every search is deterministic: candidates are visited in a fixed order,
so "first witness found" is reproducible and usable as a frozen fixture.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canceling import (
    is_k_canceling_signing,
    is_rk_canceling_coloring,
    necessary_conditions,
)
from .distances import (
    INFINITE,
    EdgeColoring,
    Signing,
    SizeGuardError,
    bipartite_lower_bound,
    leaf_lower_bound,
    wiener_signed,
)
from .graphs import Graph, complete_graph, is_connected, path_graph, star_graph

# 2^22 candidate signings is a few minutes of checking; beyond that the
# caller must opt in explicitly.
DEFAULT_MAX_SEARCH_BITS = 22
TREE_MAX_N = 10
DYCK_MAX_N = 8
CONNECTED_ENUM_MAX_N = 6


def _check_bits(bits: int, max_bits: int | None, what: str) -> None:
    limit = DEFAULT_MAX_SEARCH_BITS if max_bits is None else max_bits
    if bits > limit:
        raise SizeGuardError(
            f"{what} needs {bits} candidate bits, guard allows {limit}; "
            "pass a larger max_bits to override")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an existential search over signings or colorings.

    found with witness None never happens; a not-found result with
    filtered=False is an exhaustive proof at the instance (modulo the
    recorded symmetry factor), while filtered=True means the necessary
    conditions already ruled the graph out and nothing was examined.
    """

    found: bool
    witness: Signing | EdgeColoring | None
    examined: int
    symmetry_factor: int
    filtered: bool = False


def _half_space_signings(m: int):
    """All sign tuples with the first edge fixed +1, lexicographically
    (+1 before -1); negating a signing never changes any |sum|."""
    if m == 0:
        yield ()
        return
    for rest in itertools.product((1, -1), repeat=m - 1):
        yield (1,) + rest


def find_k_canceling_signing(g: Graph, k: int, *,
                             use_filter: bool = True,
                             max_bits: int | None = None,
                             max_n: int | None = None) -> SearchResult:
    """Search for a k-canceling signing of g.

    With use_filter the necessary conditions run first as a fast
    reject; pass use_filter=False to force the raw exhaustive sweep
    (needed when the search itself is the evidence the conditions are
    being tested against).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n <= k:
        raise ValueError(
            f"k-canceling search needs n >= k+1 (n={g.n}, k={k})")
    if use_filter and not necessary_conditions(g, k).passes:
        return SearchResult(False, None, 0, 2, filtered=True)
    _check_bits(max(g.m - 1, 0), max_bits, "signing search")
    examined = 0
    for signs in _half_space_signings(g.m):
        examined += 1
        sigma = Signing(signs)
        if is_k_canceling_signing(g, sigma, k, max_n=max_n).holds:
            return SearchResult(True, sigma, examined, 2)
    return SearchResult(False, None, examined, 2)


@dataclass(frozen=True)
class MinWienerResult:
    value: int | float
    argmin: Signing | None
    examined: int


def _gray_signings(m: int):
    """Reflected Gray order over the half space (first edge +1), so
    consecutive candidates differ in one sign."""
    if m == 0:
        yield ()
        return
    bits = m - 1
    for i in range(1 << bits):
        code = i ^ (i >> 1)
        yield (1,) + tuple(-1 if (code >> (bits - 1 - j)) & 1 else 1
                           for j in range(bits))


def min_signed_wiener(g: Graph, *,
                      max_bits: int | None = None,
                      max_n: int | None = None) -> MinWienerResult:
    """Exact minimum of the signed Wiener index over all signings,
    with the first minimizing signing in Gray-code order.

    Infinite (argmin None) iff g is disconnected.  Each candidate is
    fully recomputed; the scan stops early only when a candidate meets
    the structural lower bound, which certifies the minimum.
    """
    if not is_connected(g):
        return MinWienerResult(INFINITE, None, 0)
    _check_bits(max(g.m - 1, 0), max_bits, "signing scan")
    floor = max(bipartite_lower_bound(g), leaf_lower_bound(g))
    best: int | float = INFINITE
    best_signs = None
    examined = 0
    for signs in _gray_signings(g.m):
        examined += 1
        w = wiener_signed(g, signs, max_n=max_n)
        if w < best:
            best, best_signs = w, signs
            if best == floor:
                break
    return MinWienerResult(best, Signing(best_signs), examined)


def _cyclic_signs(n: int) -> tuple[int, ...]:
    # +1 on the Hamilton cycle v0 v1 ... v_{n-1} v0 of K_n, -1 on chords
    kn = complete_graph(n)
    return tuple(1 if v - u == 1 or (u == 0 and v == n - 1) else -1
                 for u, v in kn.edges)


def _cycle_coloring_colors(n: int, r: int, k: int) -> tuple[int, ...] | None:
    # colors 1..r-1 cycle along an m-vertex Hamilton cycle, color r on
    # everything else; only defined for k >= 2 and n large enough
    m = 3 * (k - 1) * (r - 1)
    if k < 2 or n < m or m < 3:
        return None
    kn = complete_graph(n)

    def color(u: int, v: int) -> int:
        if v < m and v - u == 1:
            return u % (r - 1) + 1
        if u == 0 and v == m - 1:
            return (m - 1) % (r - 1) + 1
        return r

    return tuple(color(u, v) for u, v in kn.edges)


def _surjective_growth_colorings(m: int, r: int):
    """Colorings of m edges modulo color permutation: first occurrences
    appear in increasing color order, and all r colors are used."""
    def extend(prefix: list[int], high: int):
        if len(prefix) == m:
            if high == r:
                yield tuple(prefix)
            return
        if r - high > m - len(prefix):
            return
        for c in range(1, min(high + 1, r) + 1):
            prefix.append(c)
            yield from extend(prefix, max(high, c))
            prefix.pop()

    yield from extend([], 0)


@dataclass(frozen=True)
class ThresholdRow:
    n: int
    holds: bool
    examined: int
    witness: Signing | EdgeColoring | None


def _threshold_one(args) -> ThresholdRow:
    r, k, n, max_bits, max_n = args
    kn = complete_graph(n)
    examined = 0
    if r == 2:
        # the cyclic signing settles most positive rows instantly
        probe = Signing(_cyclic_signs(n))
        examined += 1
        if is_k_canceling_signing(kn, probe, k, max_n=max_n).holds:
            return ThresholdRow(n, True, examined, probe)
        _check_bits(kn.m - 1, max_bits, f"threshold scan at n={n}")
        for signs in _half_space_signings(kn.m):
            examined += 1
            sigma = Signing(signs)
            if is_k_canceling_signing(kn, sigma, k, max_n=max_n).holds:
                return ThresholdRow(n, True, examined, sigma)
        return ThresholdRow(n, False, examined, None)
    structured = _cycle_coloring_colors(n, r, k)
    if structured is not None:
        examined += 1
        chi = EdgeColoring(r, structured)
        if is_rk_canceling_coloring(kn, chi, k, max_n=max_n).holds:
            return ThresholdRow(n, True, examined, chi)
    bits = math.ceil(kn.m * math.log2(r))
    _check_bits(bits, max_bits, f"threshold scan at n={n}")
    for colors in _surjective_growth_colorings(kn.m, r):
        examined += 1
        chi = EdgeColoring(r, colors)
        if is_rk_canceling_coloring(kn, chi, k, max_n=max_n).holds:
            return ThresholdRow(n, True, examined, chi)
    return ThresholdRow(n, False, examined, None)


def threshold_scan(r: int, k: int, n_range, *,
                   max_bits: int | None = None,
                   max_n: int | None = None,
                   workers: int = 1) -> list[ThresholdRow]:
    """Per-n verdicts for "K_n admits an (r,k)-canceling coloring".

    Verdicts are reported per n and never extrapolated: nothing here
    assumes cancelability of K_n is monotone in n.  Negative rows are
    exhaustive over the symmetry-reduced candidate space (global
    negation for r=2, color permutations for r >= 3, where unused
    colors are skipped because a path cannot balance an absent color).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    ns = list(n_range)
    if any(n <= max(1, k) for n in ns):
        raise ValueError(f"scan needs n >= {max(2, k + 1)}")
    jobs = [(r, k, n, max_bits, max_n) for n in ns]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_threshold_one, jobs))
    return [_threshold_one(job) for job in jobs]


@dataclass(frozen=True)
class ThresholdBounds:
    k: int
    lower_exact: float
    lower: int
    upper: int


def n2k_bounds(k: int) -> ThresholdBounds:
    """Known bounds k + log_4 k <= n_{2,k} <= 2k+4, stated for k >= 5.

    The ceiling of the lower bound is taken with integer arithmetic
    (smallest t with 4^t >= k) so powers of 4 do not fall victim to
    float rounding.
    """
    if k < 5:
        raise ValueError("bounds are stated for k >= 5")
    t = 0
    while 4 ** t < k:
        t += 1
    return ThresholdBounds(k, k + math.log(k, 4), k + t, 2 * k + 4)


# ---------------------------------------------------------------------------
# trees


def tree_signed_wiener(tree: Graph, signing) -> int:
    """W_sigma of a tree via the unique-path shortcut: a DFS from each
    root carries the running sign sum, and each pair contributes its
    absolute value."""
    signs = signing.signs if isinstance(signing, Signing) else tuple(signing)
    if tree.m != tree.n - 1 or not is_connected(tree):
        raise ValueError("not a tree")
    if len(signs) != tree.m:
        raise ValueError("signing length mismatch")
    total = 0
    for root in range(tree.n):
        stack = [(root, -1, 0)]
        while stack:
            v, parent, acc = stack.pop()
            if v > root:
                total += abs(acc)
            for w in tree.neighbors(v):
                if w != parent:
                    s = signs[tree.edge_index(v, w)]
                    stack.append((w, v, acc + s))
    return total


def _tree_centers(n: int, nbrs: list[list[int]]) -> list[int]:
    if n == 1:
        return [0]
    degree = [len(a) for a in nbrs]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in nbrs[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(root: int, parent: int, nbrs: list[list[int]]) -> tuple:
    subs = sorted(_rooted_code(w, root, nbrs)
                  for w in nbrs[root] if w != parent)
    return tuple(subs)


def tree_canonical_form(tree: Graph) -> tuple:
    """Isomorphism-invariant code: the lexicographically least rooted
    code over the one or two centers."""
    nbrs = [list(tree.neighbors(v)) for v in range(tree.n)]
    codes = [_rooted_code(c, -1, nbrs) for c in _tree_centers(tree.n, nbrs)]
    return (tree.n, min(codes))


def _is_double_star(tree: Graph) -> bool:
    # some pair of vertices touches every edge
    if tree.m <= 1:
        return True
    for x in range(tree.n):
        for y in range(x + 1, tree.n):
            if all(u == x or u == y or v == x or v == y
                   for u, v in tree.edges):
                return True
    return False


@dataclass(frozen=True)
class TreeRecord:
    tree: Graph
    degree_sequence: tuple[int, ...]
    double_star: bool
    min_wiener: int
    max_wiener: int


def _all_trees(n: int) -> list[Graph]:
    if n == 1:
        return [Graph(1, [])]
    seen = {}
    for parent in _all_trees(n - 1):
        for attach in range(n - 1):
            t = Graph(n, list(parent.edges) + [(attach, n - 1)])
            key = tree_canonical_form(t)
            if key not in seen:
                seen[key] = t
    return list(seen.values())


def enumerate_trees(n: int) -> list[TreeRecord]:
    """All pairwise non-isomorphic trees on n vertices, once each, with
    their signed Wiener range over all signings."""
    if not 1 <= n <= TREE_MAX_N:
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_MAX_N}")
    records = []
    for t in _all_trees(n):
        lo = hi = None
        for signs in _half_space_signings(t.m):
            w = tree_signed_wiener(t, signs)
            lo = w if lo is None else min(lo, w)
            hi = w if hi is None else max(hi, w)
        degs = tuple(sorted((t.degree(v) for v in range(n)), reverse=True))
        records.append(TreeRecord(t, degs, _is_double_star(t), lo, hi))
    return records


def _alternating_signs(m: int) -> tuple[int, ...]:
    return tuple(1 if i % 2 == 0 else -1 for i in range(m))


@dataclass(frozen=True)
class SandwichReport:
    """Both halves of the path-sandwich conjecture for signed trees,
    reported separately: the upper half (W_sigma at most the classical
    Wiener index of the path) is a theorem, the lower half (the
    alternating path minimizes) is open."""

    n: int
    lower_holds: bool
    upper_holds: bool
    alternating_anchor: int
    classical_anchor: int
    trees_checked: int
    signings_checked: int
    lower_counterexample: tuple[Graph, Signing] | None
    upper_counterexample: tuple[Graph, Signing] | None


def _sandwich_one(args):
    edges, n, low, high = args
    t = Graph(n, list(edges))
    bad_low = bad_high = None
    count = 0
    for signs in _half_space_signings(t.m):
        count += 1
        w = tree_signed_wiener(t, signs)
        if w < low and bad_low is None:
            bad_low = signs
        if w > high and bad_high is None:
            bad_high = signs
    return edges, bad_low, bad_high, count


def verify_tree_sandwich(n: int, *, workers: int = 1) -> SandwichReport:
    """Check every signing of every n-vertex tree against the two
    anchors; negation symmetry halves each tree's signing space."""
    if not 1 <= n <= TREE_MAX_N:
        raise ValueError(f"tree scan supports 1 <= n <= {TREE_MAX_N}")
    pn = path_graph(n)
    low = tree_signed_wiener(pn, _alternating_signs(pn.m))
    high = tree_signed_wiener(pn, (1,) * pn.m)
    jobs = [(t.edges, n, low, high) for t in _all_trees(n)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sandwich_one, jobs))
    else:
        results = [_sandwich_one(job) for job in jobs]
    lower_cx = upper_cx = None
    signings = 0
    for edges, bad_low, bad_high, count in results:
        signings += count
        if bad_low is not None and lower_cx is None:
            lower_cx = (Graph(n, list(edges)), Signing(bad_low))
        if bad_high is not None and upper_cx is None:
            upper_cx = (Graph(n, list(edges)), Signing(bad_high))
    return SandwichReport(n, lower_cx is None, upper_cx is None, low, high,
                          len(results), signings, lower_cx, upper_cx)


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers 0 and 1 with a and b pendant leaves."""
    if a < 0 or b < 0:
        raise ValueError("leaf counts must be >= 0")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph(2 + a + b, edges)


def min_wiener_over_signings(tree: Graph) -> int:
    """W_* of a tree by direct scan (trees are small here)."""
    return min(tree_signed_wiener(tree, signs)
               for signs in _half_space_signings(tree.m))


@dataclass(frozen=True)
class DoubleStarReport:
    """Scan of 'every tree's W_* sits between the path's and the best
    adjacent-center double star's', plus the star-only variant that is
    known to fail."""

    n: int
    lower_holds: bool
    upper_holds: bool
    path_value: int
    best_double_star: tuple[int, int]
    best_double_star_value: int
    star_value: int
    star_only_upper_holds: bool
    lower_counterexample: Graph | None
    upper_counterexample: Graph | None
    star_counterexample: Graph | None


def verify_double_star(n: int, *, workers: int = 1) -> DoubleStarReport:
    if not 2 <= n <= TREE_MAX_N:
        raise ValueError(f"double-star scan supports 2 <= n <= {TREE_MAX_N}")
    path_value = min_wiener_over_signings(path_graph(n))
    best_ab, best_val = (0, n - 2), None
    for a in range((n - 2) // 2 + 1):
        val = min_wiener_over_signings(double_star(a, n - 2 - a))
        if best_val is None or val > best_val:
            best_ab, best_val = (a, n - 2 - a), val
    star_value = min_wiener_over_signings(star_graph(n))
    records = enumerate_trees(n)
    lower_cx = upper_cx = star_cx = None
    for rec in records:
        if rec.min_wiener < path_value and lower_cx is None:
            lower_cx = rec.tree
        if rec.min_wiener > best_val and upper_cx is None:
            upper_cx = rec.tree
        if rec.min_wiener > star_value and star_cx is None:
            star_cx = rec.tree
    return DoubleStarReport(n, lower_cx is None, upper_cx is None,
                            path_value, best_ab, best_val, star_value,
                            star_cx is None, lower_cx, upper_cx, star_cx)


# ---------------------------------------------------------------------------
# Dyck paths


@dataclass(frozen=True)
class DyckRecord:
    """A balanced up/down step sequence read as a signed path on
    2n+1 vertices: +1 per U step, -1 per D step."""

    steps: str
    signing: Signing
    wiener: int


def dyck_record(steps: str) -> DyckRecord:
    if not steps or len(steps) % 2:
        raise ValueError("step count must be positive and even")
    height = 0
    for ch in steps:
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
        else:
            raise ValueError(f"bad step {ch!r}")
        if height < 0:
            raise ValueError("path dips below the axis")
    if height != 0:
        raise ValueError("path does not return to the axis")
    signs = tuple(1 if ch == "U" else -1 for ch in steps)
    w = tree_signed_wiener(path_graph(len(steps) + 1), signs)
    return DyckRecord(steps, Signing(signs), w)


def dyck_steps(n: int):
    """All Dyck words of semilength n, lexicographically with U < D."""
    def extend(prefix: list[str], ups: int, downs: int):
        if len(prefix) == 2 * n:
            yield "".join(prefix)
            return
        if ups < n:
            prefix.append("U")
            yield from extend(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from extend(prefix, ups, downs + 1)
            prefix.pop()

    yield from extend([], 0, 0)


def dyck_records(n: int) -> list[DyckRecord]:
    if not 1 <= n <= DYCK_MAX_N:
        raise ValueError(f"Dyck scan supports 1 <= n <= {DYCK_MAX_N}")
    return [dyck_record(steps) for steps in dyck_steps(n)]


def dyck_distribution(n: int) -> dict[int, int]:
    """Exact distribution of W_sigma over all Dyck paths of semilength
    n, keyed by value in increasing order."""
    counts: dict[int, int] = {}
    for rec in dyck_records(n):
        counts[rec.wiener] = counts.get(rec.wiener, 0) + 1
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# small connected graphs


def _pair_index(n: int):
    pairs = []
    index = {}
    for u in range(n):
        for v in range(u + 1, n):
            index[(u, v)] = len(pairs)
            pairs.append((u, v))
    return pairs, index


def _canonical_mask(n: int, mask: int, pairs, index) -> int:
    best = None
    for p in itertools.permutations(range(n)):
        x = 0
        mm = mask
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            a, b = p[pairs[i][0]], p[pairs[i][1]]
            if a > b:
                a, b = b, a
            x |= 1 << index[(a, b)]
        if best is None or x < best:
            best = x
    return best


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, built by
    attaching a new vertex to every graph one size down (every
    connected graph loses some non-cut vertex to a connected graph)."""
    if not 1 <= n <= CONNECTED_ENUM_MAX_N:
        raise ValueError(
            f"connected enumeration supports 1 <= n <= {CONNECTED_ENUM_MAX_N}")
    if n == 1:
        return [Graph(1, [])]
    pairs, index = _pair_index(n)
    seen: dict[int, int] = {}
    for parent in connected_graphs(n - 1):
        base = 0
        for u, v in parent.edges:
            base |= 1 << index[(u, v)]
        for subset in range(1, 1 << (n - 1)):
            mask = base
            s = subset
            while s:
                w = (s & -s).bit_length() - 1
                s &= s - 1
                mask |= 1 << index[(w, n - 1)]
            key = _canonical_mask(n, mask, pairs, index)
            if key not in seen:
                seen[key] = key
    out = []
    for key in seen:
        edges = [pairs[i] for i in range(len(pairs)) if (key >> i) & 1]
        out.append(Graph(n, edges))
    return out


def theta_length_tuples(max_paths: int, max_edges: int
                        ) -> list[tuple[int, ...]]:
    """Nondecreasing path-length tuples of every valid theta graph with
    2..max_paths paths and at most max_edges edges.  At most one path
    may have length 1 (a second would duplicate the xy edge)."""
    if max_paths < 2:
        raise ValueError("theta graphs need at least two paths")
    out = []

    def extend(prefix: tuple[int, ...], budget: int) -> None:
        if len(prefix) >= 2:
            out.append(prefix)
        if len(prefix) == max_paths:
            return
        start = 2 if prefix and prefix[-1] == 1 else (prefix[-1]
                                                      if prefix else 1)
        for length in range(start, budget + 1):
            extend(prefix + (length,), budget - length)

    extend((), max_edges)
    return out
