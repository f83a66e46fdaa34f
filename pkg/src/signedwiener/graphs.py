"""Graph representation, parsing, serialization, families, and structure.

Vertices are 0-based contiguous indices.  Edge order is significant
everywhere: signings and colorings address edges by their position in
``Graph.edges``, so every constructor documents its edge order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations


class GraphFormatError(ValueError):
    """Malformed graph text.  Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph with an indexed edge list.

    Edges are stored as (min, max) pairs in their construction order.
    Instances are immutable and hashable; equality compares the vertex
    count and the ordered edge list.
    """

    __slots__ = ("n", "edges", "_index", "_nbrs", "_bits")

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        nbrs: list[list[int]] = [[] for _ in range(n)]
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in index:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            index[e] = len(norm)
            norm.append(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.edges = tuple(norm)
        self._index = index
        self._nbrs = tuple(tuple(a) for a in nbrs)
        self._bits = tuple(bits)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge uv in the edge list; KeyError if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_bits(self, v: int) -> int:
        """Neighbors of v as a bitmask."""
        return self._bits[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DeletedGraph:
    """Induced subgraph G-S with index maps back to the host graph.

    vertex_map sends surviving old indices to new ones; edge_refs[i] is
    the old edge index of new edge i, so a signing restricts by
    ``[signs[j] for j in edge_refs]``.
    """

    graph: Graph
    vertex_map: dict[int, int]
    edge_refs: tuple[int, ...]


def delete_vertices(g: Graph, s) -> DeletedGraph:
    """Induced subgraph on V minus s, preserving surviving edge order."""
    dead = set(s)
    if not all(0 <= v < g.n for v in dead):
        raise ValueError("deleted vertex out of range")
    keep = [v for v in range(g.n) if v not in dead]
    vmap = {v: i for i, v in enumerate(keep)}
    edges = []
    refs = []
    for i, (u, v) in enumerate(g.edges):
        if u in vmap and v in vmap:
            edges.append((vmap[u], vmap[v]))
            refs.append(i)
    return DeletedGraph(Graph(len(keep), edges), vmap, tuple(refs))


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Unsigned distances from source; math.inf for unreachable vertices."""
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if dist[w] is math.inf:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    has_odd_cycle: bool
    min_degree: int
    edge_count: int
    leaf_count: int


def structural_report(g: Graph) -> StructuralReport:
    """Connectivity, bipartiteness, degree extremes, and leaf count."""
    color = [-1] * g.n
    bipartite = True
    components = 0
    for s in range(g.n):
        if color[s] != -1:
            continue
        components += 1
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    bipartite = False
    parts = None
    if bipartite:
        side0 = tuple(v for v in range(g.n) if color[v] == 0)
        side1 = tuple(v for v in range(g.n) if color[v] == 1)
        parts = (side0, side1)
    degrees = [g.degree(v) for v in range(g.n)]
    return StructuralReport(
        connected=components <= 1,
        bipartite=bipartite,
        parts=parts,
        has_odd_cycle=not bipartite,
        min_degree=min(degrees) if degrees else 0,
        edge_count=g.m,
        leaf_count=sum(1 for d in degrees if d == 1),
    )


def is_connected(g: Graph) -> bool:
    return structural_report(g).connected


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff every deletion of fewer than k vertices leaves a
    connected graph on at least one vertex.  Subset enumeration; fine at
    desk scale."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for size in range(min(k, g.n + 1)):
        for s in combinations(range(g.n), size):
            sub = delete_vertices(g, s).graph
            if sub.n == 0 or not is_connected(sub):
                return False
    return True


def union_at_vertex(g1: Graph, g2: Graph, w1: int, w2: int) -> Graph:
    """Disjoint union with w1 and w2 identified.

    g1 keeps its vertex indices; g2's vertices map to w2 -> w1 and the
    rest, in order, to n1, n1+1, ...  The edge list is g1's edges
    followed by g2's, so signings concatenate positionally.
    """
    if not 0 <= w1 < g1.n:
        raise ValueError("w1 out of range")
    if not 0 <= w2 < g2.n:
        raise ValueError("w2 out of range")
    vmap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == w2:
            vmap[v] = w1
        else:
            vmap[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges += [(vmap[u], vmap[v]) for u, v in g2.edges]
    return Graph(g1.n + g2.n - 1, edges)


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining pairs at distance 1 or 2.

    Edges come out in lexicographic vertex order, the convention every
    square-based signing in this package assumes.
    """
    edges = []
    for u in range(g.n):
        du = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if du[v] <= 2:
                edges.append((u, v))
    return Graph(g.n, edges)


# ---------------------------------------------------------------------------
# named families

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1, edges in lex order."""
    if a < 1 or b < 1:
        raise ValueError("parts must be nonempty")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def blowup_parts(sizes) -> list[tuple[int, ...]]:
    """Contiguous vertex blocks for a blowup with the given part sizes."""
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    return parts


def blowup_cycle_graph(sizes) -> Graph:
    """Blowup of C_t, t = len(sizes), parts contiguous in index order.

    Edges come in consecutive-part blocks 0-1, 1-2, ..., (t-1)-0, each
    block ordered by (vertex in part i, vertex in part i+1).
    """
    sizes = tuple(sizes)
    t = len(sizes)
    if t < 3:
        raise ValueError("blowup base cycle needs >= 3 parts")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    parts = blowup_parts(sizes)
    edges = []
    for i in range(t):
        for u in parts[i]:
            for v in parts[(i + 1) % t]:
                edges.append((u, v))
    return Graph(sum(sizes), edges)


def theta_graph(lengths) -> Graph:
    """Internally disjoint paths with common endpoints x=0, y=1.

    Path j of length lengths[j] contributes lengths[j]-1 internal
    vertices, numbered consecutively path by path starting at 2.  Edges
    run path by path from x to y.  At most one length may be 1, else the
    graph would need a repeated edge.
    """
    lengths = tuple(lengths)
    if len(lengths) < 2:
        raise ValueError("theta graph needs >= 2 paths")
    if any(ln < 1 for ln in lengths):
        raise ValueError("path lengths must be >= 1")
    if sum(1 for ln in lengths if ln == 1) > 1:
        raise ValueError("at most one length-1 path in a simple graph")
    edges = []
    nxt = 2
    for ln in lengths:
        prev = 0
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "complete": (complete_graph, 1),
    "complete-bipartite": (complete_bipartite_graph, 2),
}


def make_family(family: str, params) -> Graph:
    """Build a named family graph.

    Args:
        family: one of path, cycle, star, complete, complete-bipartite,
            blowup, theta.
        params: integer parameters; blowup takes part sizes of the base
            odd-or-even cycle C_t with t = len(params), theta takes path
            lengths.
    """
    params = tuple(int(p) for p in params)
    if family == "blowup":
        return blowup_cycle_graph(params)
    if family == "theta":
        return theta_graph(params)
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"family {family} takes {arity} parameter(s)")
    return fn(*params)


# ---------------------------------------------------------------------------
# native edge-list format
#
# line 1: "n m"; then m lines "u v" with an optional trailing sign
# ("+"/"-") or color (integer >= 1).  '#' starts a comment, whole-line
# or trailing.  Comment lines are preserved for claim headers.

@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    signs: tuple[int, ...] | None
    colors: tuple[int, ...] | None
    comments: tuple[str, ...]


def parse_any(text: str) -> ParsedGraph:
    """Parse plain, signed, or colored edge-list text."""
    header: tuple[int, int] | None = None
    rows: list[tuple[int, int, int, str | None]] = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        if "#" in line:
            body, comment = line.split("#", 1)
            if not body.strip():
                comments.append(comment.strip())
            line = body
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError("expected header 'n m'", lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (n, m)
            continue
        if len(fields) not in (2, 3):
            raise GraphFormatError("expected 'u v' with optional tag", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError("vertex indices must be integers", lineno)
        rows.append((lineno, u, v, fields[2] if len(fields) == 3 else None))
    if header is None:
        raise GraphFormatError("empty input, expected header 'n m'")
    n, m = header
    if len(rows) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(rows)}")

    tags = [tag for _, _, _, tag in rows]
    tagged = [t is not None for t in tags]
    if any(tagged) and not all(tagged):
        bad = rows[tagged.index(False)][0]
        raise GraphFormatError("mixed tagged and untagged edge lines", bad)

    signs: list[int] | None = None
    colors: list[int] | None = None
    if all(tagged) and rows:
        if all(t in ("+", "-") for t in tags):
            signs = [1 if t == "+" else -1 for t in tags]
        else:
            colors = []
            for lineno, _, _, t in rows:
                try:
                    c = int(t)
                except ValueError:
                    raise GraphFormatError(
                        f"edge tag must be +, -, or an integer, got {t!r}",
                        lineno)
                if c < 1:
                    raise GraphFormatError("colors must be >= 1", lineno)
                colors.append(c)

    edges = []
    seen = set()
    for lineno, u, v, _ in rows:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}",
                                   lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({key[0]},{key[1]})",
                                   lineno)
        seen.add(key)
        edges.append((u, v))
    return ParsedGraph(
        Graph(n, edges),
        tuple(signs) if signs is not None else None,
        tuple(colors) if colors is not None else None,
        tuple(comments),
    )


def parse_graph(text: str) -> Graph:
    """Parse a plain edge list; signed or colored input is an error."""
    parsed = parse_any(text)
    if parsed.signs is not None or parsed.colors is not None:
        raise GraphFormatError("expected a plain edge list, got tagged edges")
    return parsed.graph


def parse_signed_graph(text: str) -> tuple[Graph, tuple[int, ...]]:
    parsed = parse_any(text)
    if parsed.signs is None:
        raise GraphFormatError("expected '+'/'-' tags on every edge line")
    return parsed.graph, parsed.signs


def parse_colored_graph(text: str) -> tuple[Graph, tuple[int, ...]]:
    parsed = parse_any(text)
    if parsed.colors is None:
        raise GraphFormatError("expected integer color tags on every edge line")
    return parsed.graph, parsed.colors


def emit_graph(g: Graph, comments=()) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"


def emit_signed_graph(g: Graph, signs, comments=()) -> str:
    signs = tuple(signs)
    if len(signs) != g.m or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must map every edge index to +1 or -1")
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {'+' if s == 1 else '-'}"
              for (u, v), s in zip(g.edges, signs)]
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"


def emit_colored_graph(g: Graph, colors, comments=()) -> str:
    colors = tuple(colors)
    if len(colors) != g.m or any(c < 1 for c in colors):
        raise ValueError("colors must map every edge index to an int >= 1")
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {c}" for (u, v), c in zip(g.edges, colors)]
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (n <= 62).  Read-only support for sweeping
    standard small-graph corpora."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 line")
    if s[0] == "~":
        raise GraphFormatError("graph6 input limited to n <= 62")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= b < 64 for b in data):
        raise GraphFormatError("graph6 characters must be in chr(63..126)")
    n = data[0]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise GraphFormatError(
            f"graph6 for n={n} needs {need} data characters, got {len(data) - 1}")
    bits = []
    for b in data[1:]:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)
