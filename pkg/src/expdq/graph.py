"""Simple undirected graphs on vertices ``0..n-1`` stored as bitset rows.

Vertex labelling of every constructor is fixed and documented so tests can
refer to concrete vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidParameter, MalformedGraph6

UNREACHABLE = None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {u} names a vertex >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        return cls.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]]
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(u) for u in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.rows[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in _bits(self.rows[u])
            if v in index and index[u] < index[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """Delete vertices; survivors keep their relative order."""
        gone = set(removed)
        return self.induced([v for v in range(self.n) if v not in gone])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def parse_graph6(s: str) -> Graph:
    """Decode a short-form (n <= 62) graph6 string."""
    s = s.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise MalformedGraph6(f"byte out of range in {s!r}")
    n = data[0]
    if n == 63:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(data) - 1 != nchars:
        raise MalformedGraph6(
            f"expected {nchars} edge characters for n={n}, got {len(data) - 1}"
        )
    bits = []
    for d in data[1:]:
        bits.extend((d >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6(f"nonzero padding bits in {s!r}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("short-form graph6 supports n <= 62")
    bits = [g.rows[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, graph6, graph)``; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if text.startswith(_HEADER):
            text = text[len(_HEADER):]
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line=lineno) from None


# ---------------------------------------------------------------------------
# distances and components
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    rows = g.rows
    while frontier:
        d += 1
        reach = 0
        for v in _bits(frontier):
            reach |= rows[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = d
    return dist


def all_pairs_distances(g: Graph) -> list[list[int | None]]:
    """Shortest-path distances; ``None`` (UNREACHABLE) across components."""
    return [bfs_distances(g, s) for s in range(g.n)]


def component_list(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~seen
            seen |= frontier
        comps.append(list(_bits(seen)))
        remaining &= ~seen
    return comps


@dataclass(frozen=True)
class ComponentProfile:
    sizes: tuple[int, ...]  # descending

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)


def components(g: Graph) -> ComponentProfile:
    return ComponentProfile(tuple(sorted((len(c) for c in component_list(g)), reverse=True)))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_list(g)) == 1


def diameter(g: Graph) -> int:
    """Largest finite distance.  For disconnected graphs this is the largest
    diameter among the components, not infinity."""
    best = 0
    for row in all_pairs_distances(g):
        for d in row:
            if d is not None and d > best:
                best = d
    return best


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    """``0 - 1 - ... - (n-1)``."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """``0 - 1 - ... - (n-1) - 0``."""
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def hypercube(d: int) -> Graph:
    """Vertices are d-bit integers; adjacent when they differ in one bit."""
    if d < 0:
        raise InvalidParameter("hypercube dimension must be nonnegative")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def wheel(n: int) -> Graph:
    """``C_n`` on ``0..n-1`` joined to the hub ``n``."""
    return join(cycle(n), complete(1))


def kneser_subsets(n: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), r))


def kneser(n: int, r: int) -> Graph:
    """Vertex ``i`` is the i-th r-subset of ``range(n)`` in lexicographic order."""
    if r < 1 or n < 2 * r + 1:
        raise InvalidParameter(f"Kneser graph KG({n},{r}) needs r >= 1 and n >= 2r+1")
    subsets = [frozenset(s) for s in kneser_subsets(n, r)]
    return Graph.from_edges(
        len(subsets),
        [(i, j) for i, j in itertools.combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]],
    )


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def construct(family: str, *params: int) -> Graph:
    builders = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "hypercube": hypercube,
        "wheel": wheel,
        "kneser": kneser,
        "empty": empty,
        "star": star,
    }
    try:
        builder = builders[family]
    except KeyError:
        raise InvalidParameter(f"unknown family {family!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise InvalidParameter(f"bad parameters for {family}: {exc}") from None


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g keeps its labels; h's vertex v becomes ``g.n + v``."""
    off = g.n
    return Graph(g.n + h.n, g.rows + tuple(row << off for row in h.rows))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(i, j)`` has index ``i * h.n + j``."""
    m = h.n
    edges = []
    for i in range(g.n):
        for a, b in h.edges():
            edges.append((i * m + a, i * m + b))
    for a, b in g.edges():
        for j in range(m):
            edges.append((a * m + j, b * m + j))
    return Graph.from_edges(g.n * m, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union (same labelling) plus every edge between the sides."""
    u = disjoint_union(g, h)
    return u.add_edges((a, g.n + b) for a in range(g.n) for b in range(h.n))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)))


def graph_op(kind: str, g: Graph, h: Graph | None = None) -> Graph:
    if kind == "complement":
        return complement(g)
    ops = {"disjoint_union": disjoint_union, "cartesian_product": cartesian_product, "join": join}
    if kind not in ops:
        raise InvalidParameter(f"unknown graph operation {kind!r}")
    if h is None:
        raise InvalidParameter(f"{kind} needs two graphs")
    return ops[kind](g, h)


def vertex_identification(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Merge ``u`` of g with ``v`` of h.

    g keeps labels ``0..g.n-1`` and the merged vertex is ``u``.  The other
    vertices of h follow in their original order starting at ``g.n``.
    """
    if not (0 <= u < g.n and 0 <= v < h.n):
        raise InvalidParameter("identification vertex out of range")
    mapping = {}
    nxt = g.n
    for w in range(h.n):
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = nxt
            nxt += 1
    edges = list(g.edges()) + [(mapping[a], mapping[b]) for a, b in h.edges()]
    return Graph.from_edges(g.n + h.n - 1, edges)


def attach(g: Graph, u: int, kind: str, k: int) -> Graph:
    """Add k new vertices ``g.n .. g.n+k-1`` at ``u``.

    ``pendant_path``: ``u - g.n - g.n+1 - ...``.  ``pendant_leaves``: each new
    vertex adjacent to u only.  ``pendant_clique``: the new vertices form a
    clique and are all adjacent to u.
    """
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    if not 0 <= u < g.n:
        raise InvalidParameter("attachment vertex out of range")
    new = list(range(g.n, g.n + k))
    if kind == "pendant_path":
        chain = [u] + new
        extra = list(zip(chain, chain[1:]))
    elif kind == "pendant_leaves":
        extra = [(u, w) for w in new]
    elif kind == "pendant_clique":
        extra = [(u, w) for w in new] + list(itertools.combinations(new, 2))
    else:
        raise InvalidParameter(f"unknown attachment {kind!r}")
    return Graph.from_edges(g.n + k, list(g.edges()) + extra)


def find_twins(g: Graph) -> list[tuple[int, int, bool]]:
    """All pairs ``(u, v, connected)`` with equal neighbourhoods outside the pair."""
    out = []
    rows = g.rows
    for u in range(g.n):
        for v in range(u + 1, g.n):
            mask = ~((1 << u) | (1 << v))
            if rows[u] & mask == rows[v] & mask:
                out.append((u, v, bool(rows[u] >> v & 1)))
    return out
