"""Named example graphs.

Edge lists are written with 1-based vertex labels and shifted down by one,
so label ``i`` below is vertex ``i - 1`` of the returned graph.
"""

from __future__ import annotations

from .graph import Graph, attach, cartesian_product, complete, cycle, disjoint_union, empty, star


def _from_one(n: int, edges: str) -> Graph:
    pairs = []
    for token in edges.split():
        a, b = token.split("-")
        pairs.append((int(a) - 1, int(b) - 1))
    return Graph.from_edges(n, pairs)


def saltire_pair() -> tuple[Graph, Graph]:
    """K_{1,4} and C_4 + K_1: A-cospectral, not D_q-cospectral."""
    return star(4), disjoint_union(cycle(4), empty(1))


def dq_not_d_pair() -> tuple[Graph, Graph]:
    """Seven-vertex pair that is D_q-cospectral but not D-cospectral."""
    g = _from_one(7, "1-2 1-3 2-4 1-4 3-4 4-5 4-6 5-7")
    h = _from_one(7, "1-2 1-4 2-5 1-5 3-4 4-5 4-6 5-7")
    return g, h


def d_not_dq_pair() -> tuple[Graph, Graph]:
    """Seven-vertex pair that is D-cospectral but not D_q-cospectral."""
    g = _from_one(7, "1-4 1-5 1-6 2-4 2-5 2-6 3-5 3-6 4-5 4-7 5-7")
    h = _from_one(7, "1-2 2-3 1-4 1-6 2-5 3-4 3-5 3-6 4-5 4-7 5-7")
    return g, h


def cycle_gadget() -> tuple[Graph, int, int]:
    """Nine-cycle a1..a9 with leaves at a1, a4, a7, a8, and the two glue points.

    Cycle vertices are 0..8 (a_i is i-1); the leaves are 9..12.  Hanging an
    extra leaf at a2 or at a5 gives isomorphic graphs (rotate by six), and
    the gadget itself is unchanged, so the pair (a2, a5) can be glued.
    """
    g = cycle(9)
    for a in (1, 4, 7, 8):
        g = attach(g, a - 1, "pendant_leaves", 1)
    return g, 1, 4


def tree_gadget() -> tuple[Graph, int, int]:
    """Sixteen-vertex tree T with glue points u1 = 4 and u2 = 7 (1-based labels)."""
    t = _from_one(
        16,
        "3-4 4-5 3-2 2-1 3-11 11-12 5-6 6-7 7-8 8-9 9-10 9-16 6-13 13-14 14-15",
    )
    return t, 3, 6


def tree_mates() -> tuple[Graph, Graph]:
    """T with a leaf added at u1, and T with a leaf added at u2."""
    t, u1, u2 = tree_gadget()
    return attach(t, u1, "pendant_leaves", 1), attach(t, u2, "pendant_leaves", 1)


def specific_q_pairs() -> dict[str, tuple[Graph, Graph, list[str]]]:
    """Pairs cospectral only at particular q, keyed "a", "b" and "c".

    Values are ``(g, h, q literals)``.
    """
    a1 = _from_one(6, "1-2 1-3 1-4 1-5 2-3 2-4 2-6 5-3 5-4 5-6 6-4 6-3 3-4")
    a2 = _from_one(6, "1-2 1-3 1-4 5-6")
    b1 = _from_one(6, "1-4 1-5 1-6 2-4 2-5 2-6 3-4 3-5 3-6")
    b2 = _from_one(6, "1-5 1-6 2-5 2-6 3-5 3-6 4-5 4-6 5-6")
    c1 = disjoint_union(cycle(5), empty(1))
    c2 = _from_one(6, "1-2 2-4 1-3 3-6 2-3 4-5 5-6 2-5 3-5")
    return {
        "a": (a1, a2, ["3"]),
        "b": (b1, b2, ["-2"]),
        "c": (c1, c2, ["2i", "-2i"]),
    }


def half_q_pair() -> tuple[Graph, Graph]:
    """Friendship graph on 7 vertices and a mate, cospectral at q = 1/2.

    Vertex 0 is the hub in both; vertex 1 is isolated in the mate.
    """
    g = Graph.from_edges(7, [(0, i) for i in range(1, 7)] + [(1, 2), (3, 4), (5, 6)])
    h = Graph.from_edges(
        7,
        [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (4, 5), (3, 5), (3, 4), (5, 6), (2, 6), (2, 5)],
    )
    return g, h


def spectral_radius_pair(as_drawn: bool = False) -> tuple[Graph, Graph]:
    """Two 7-vertex graphs whose D_q spectral radii swap order between q = 1/2 and 1/4.

    With 11 edges the first graph has radii 3.278 / 1.982 instead of the
    target 3.352 / 2.0378.  Adding the edge 3-6 (1-based labels) reproduces
    both values, and no other single-edge edit does, so that edge is included
    unless ``as_drawn`` is set.
    """
    edges = "1-2 1-4 1-6 2-3 2-5 3-4 4-5 4-6 4-7 6-7 5-6"
    if not as_drawn:
        edges += " 3-6"
    g = _from_one(7, edges)
    h = _from_one(7, "1-5 1-4 1-3 2-3 2-4 2-5 4-6 4-7 3-6 3-7 5-6 5-7")
    return g, h


def cross_q_pair(n: int = 3) -> tuple[Graph, str, Graph, str]:
    """K_n x K_n at q = (n-2)/(n-1) and K_{(n-1)^2+1} + (2n-2)K_1 at q = (n^2-2n)/(n-1)^2.

    Both spectra are {(n-1)^2, 1 (x 2n-2), 1/(n-1)^2 (x (n-1)^2)}.  For n = 3
    that is {4, 1 (x4), 1/4 (x4)}.
    """
    if n < 3:
        raise ValueError("needs n >= 3")
    g = cartesian_product(complete(n), complete(n))
    h = disjoint_union(complete((n - 1) ** 2 + 1), empty(2 * n - 2))
    return g, f"{n - 2}/{n - 1}", h, f"{n * n - 2 * n}/{(n - 1) ** 2}"
