"""Recursion identities as checkers, and cospectral constructions as builders.

Every builder verifies its own output: the hypotheses of a construction are
checked, the graphs are built, and cospectrality is confirmed by computing
both characteristic polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConditionViolated, ConstructionError, DiameterExceeded, StructureMismatch
from .expdist import charpoly
from .graph import (
    Graph,
    all_pairs_distances,
    attach,
    diameter,
    is_connected,
    vertex_identification,
)
from .polyring import ONE, Q, X, ZERO, BiPoly

Q2 = Q * Q
F2 = (Q2 + 1) * X - 1 + Q2
Q2X2 = Q2 * X * X


@lru_cache(maxsize=None)
def fk(k: int) -> BiPoly:
    """0, 1, (q^2+1)x - 1 + q^2, then f_2 f_(k-1) - q^2 x^2 f_(k-2)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ZERO
    if k == 1:
        return ONE
    if k == 2:
        return F2
    return F2 * fk(k - 1) - Q2X2 * fk(k - 2)


def path_charpoly(n: int) -> BiPoly:
    """D_q polynomial of P_n from the two-term recurrence, no determinant."""
    prev, cur = ONE, X - 1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, F2 * cur - Q2X2 * prev
    return cur


# ---------------------------------------------------------------------------
# pendant paths and leaves
# ---------------------------------------------------------------------------


def find_pendant_path(g: Graph, u: int, k: int) -> list[int]:
    """Vertices v1..vk with u ~ v1 ~ ... ~ vk, vk a leaf, the rest of degree 2."""
    for v1 in g.neighbors(u):
        chain = [v1]
        prev, cur = u, v1
        while len(chain) < k:
            if g.degree(cur) != 2:
                break
            (nxt,) = [w for w in g.neighbors(cur) if w != prev]
            if nxt == u or nxt in chain:
                break
            chain.append(nxt)
            prev, cur = cur, nxt
        if len(chain) == k and g.degree(chain[-1]) == 1:
            return chain
    raise StructureMismatch(f"no pendant path with {k} vertices at vertex {u}")


def verify_pendant_path(g: Graph, u: int, k: int) -> bool:
    """P_G = f_k P_H1 - q^2 x^2 f_(k-1) P_H2.

    H1 drops v2..vk and H2 drops v1..vk.
    """
    if k < 1:
        raise StructureMismatch("a pendant path needs k >= 1")
    chain = find_pendant_path(g, u, k)
    h1 = g.remove_vertices(chain[1:])
    h2 = g.remove_vertices(chain)
    lhs = charpoly(g)
    return lhs == fk(k) * charpoly(h1) - Q2X2 * fk(k - 1) * charpoly(h2)


def find_pendant_leaves(g: Graph, u: int, k: int, clique_variant: bool = False) -> list[int]:
    """k leaves at u, or k vertices forming a clique hanging off u alone."""
    nbrs = g.neighbors(u)
    if not clique_variant:
        leaves = [v for v in nbrs if g.degree(v) == 1]
        if len(leaves) < k:
            raise StructureMismatch(f"vertex {u} has {len(leaves)} leaves, need {k}")
        return leaves[:k]
    # vertices whose closed neighbourhood is {u} + the clique itself
    for cand in itertools.combinations(nbrs, k):
        block = set(cand) | {u}
        if all(set(g.neighbors(v)) | {v} == block for v in cand):
            return list(cand)
    raise StructureMismatch(f"no pendant {k}-clique at vertex {u}")


def leaves_closed_form(k: int, c: BiPoly, p_h1: BiPoly, p_h2: BiPoly) -> BiPoly:
    """k (x-c)^(k-1) P_H1 - (k-1) (x-c)^k P_H2."""
    if k == 0:
        return p_h2
    xc = X - c
    return k * xc ** (k - 1) * p_h1 - (k - 1) * xc**k * p_h2


def verify_pendant_leaves(g: Graph, u: int, k: int, clique_variant: bool = False) -> bool:
    """Check the corrected closed form and the two-term recurrence.

    c = 1 - q^2 for leaves and 1 - q for a pendant clique.  With G_j the host
    carrying j of the k pendant vertices, the recurrence is
    P_(G_j) = 2(x-c) P_(G_(j-1)) - (x-c)^2 P_(G_(j-2)).
    """
    if k < 1:
        raise StructureMismatch("needs k >= 1")
    extra = find_pendant_leaves(g, u, k, clique_variant)
    c = ONE - Q if clique_variant else ONE - Q2
    polys = [charpoly(g.remove_vertices(extra[j:])) for j in range(k + 1)]
    closed_ok = polys[k] == leaves_closed_form(k, c, polys[1], polys[0])
    xc = X - c
    rec_ok = all(
        polys[j] == 2 * xc * polys[j - 1] - xc * xc * polys[j - 2] for j in range(2, k + 1)
    )
    return closed_ok and rec_ok


# ---------------------------------------------------------------------------
# non-isomorphism separator
# ---------------------------------------------------------------------------


def _vertex_profiles(g: Graph) -> list[tuple]:
    out = []
    for row in all_pairs_distances(g):
        counts: dict = {}
        for d in row:
            counts[d if d is not None else -1] = counts.get(d if d is not None else -1, 0) + 1
        out.append(tuple(sorted(counts.items())))
    return sorted(out)


def separate(g: Graph, h: Graph) -> str:
    """"NONISOMORPHIC" when an invariant differs, else "UNDECIDED".

    Invariants: degree sequence, then the sorted per-vertex distance counts,
    then the sorted (degree, neighbour degrees) signatures.
    """
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return "NONISOMORPHIC"
    if _vertex_profiles(g) != _vertex_profiles(h):
        return "NONISOMORPHIC"

    def sig(x: Graph):
        return sorted((x.degree(v), tuple(sorted(x.degree(w) for w in x.neighbors(v)))) for v in range(x.n))

    if sig(g) != sig(h):
        return "NONISOMORPHIC"
    return "UNDECIDED"


# ---------------------------------------------------------------------------
# gluing
# ---------------------------------------------------------------------------


def glue_cospectral(g1: Graph, u1: int, g2: Graph, u2: int, h: Graph, v: int) -> tuple[Graph, Graph, bool]:
    """Identify u1 (resp. u2) with v in h.

    Certified when g1, g2 are cospectral and stay cospectral after a leaf is
    hung at u1 and u2.  Certified outputs are checked to be cospectral and a
    failure raises ConstructionError.
    """
    out1 = vertex_identification(g1, u1, h, v)
    out2 = vertex_identification(g2, u2, h, v)
    certified = charpoly(g1) == charpoly(g2) and charpoly(
        attach(g1, u1, "pendant_leaves", 1)
    ) == charpoly(attach(g2, u2, "pendant_leaves", 1))
    if certified and charpoly(out1) != charpoly(out2):
        raise ConstructionError("certified glue produced a non-cospectral pair")
    return out1, out2, certified


# ---------------------------------------------------------------------------
# switching
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SwitchConfig:
    g1: int
    g2: int
    h1: int
    h2: int
    S: frozenset
    A: frozenset
    B: frozenset
    variant: int  # 1: K_4, 2: 4-cycle g1 g2 h2 h1, 3: 4-cycle g1 h1 g2 h2


def _variant(g: Graph, g1: int, g2: int, h1: int, h2: int) -> int | None:
    e = g.has_edge
    pattern = (e(g1, g2), e(h1, h2), e(g1, h1), e(g2, h2), e(g1, h2), e(g2, h1))
    return {
        (True,) * 6: 1,
        (True, True, True, True, False, False): 2,
        (False, False, True, True, True, True): 3,
    }.get(pattern)


def _config(g: Graph, dist, g1, g2, h1, h2, variant) -> SwitchConfig | None:
    quad = {g1, g2, h1, h2}
    a, b = set(), set()
    for w in range(g.n):
        if w in quad:
            continue
        s = dist[w][g1] + dist[w][g2] - dist[w][h1] - dist[w][h2]
        if s == -2:
            a.add(w)
        elif s == 0:
            b.add(w)
        else:
            return None
    s_set = {
        w
        for w in a
        if g.has_edge(w, g1) and g.has_edge(w, g2) and not g.has_edge(w, h1) and not g.has_edge(w, h2)
    }
    return SwitchConfig(g1, g2, h1, h2, frozenset(s_set), frozenset(a), frozenset(b), variant)


def _switched(g: Graph, c: SwitchConfig) -> Graph:
    moved = {frozenset((s, t)) for s in c.S for t in (c.g1, c.g2)}
    edges = [e for e in g.edges() if frozenset(e) not in moved]
    edges += [(s, t) for s in c.S for t in (c.h1, c.h2)]
    return Graph.from_edges(g.n, edges)


def _check_conditions(g: Graph, h: Graph, c: SwitchConfig) -> None:
    dg, dh = all_pairs_distances(g), all_pairs_distances(h)
    quad = (c.g1, c.g2, c.h1, c.h2)
    for v in c.B:
        if dg[v] != dh[v]:
            raise ConditionViolated(f"distances from B-vertex {v} changed")
    for w in c.A:
        for u in range(g.n):
            if u in quad:
                continue
            if dh[w][u] != dg[w][u]:
                raise ConditionViolated(f"distance {w}-{u} changed")
        for gi in (c.g1, c.g2):
            if dh[w][gi] is None or dh[w][gi] != dg[w][gi] + 1:
                raise ConditionViolated(f"distance {w}-{gi} did not grow by one")
        for hi in (c.h1, c.h2):
            if dh[w][hi] is None or dh[w][hi] != dg[w][hi] - 1:
                raise ConditionViolated(f"distance {w}-{hi} did not shrink by one")


def apply_switch(g: Graph, c: SwitchConfig, check: bool = True) -> Graph:
    """Move the S edges from g1, g2 to h1, h2 and verify the outcome.

    Raises ConditionViolated when the distance conditions fail on the result,
    and ConstructionError if they hold but the spectra still differ.
    """
    if not c.S:
        return g
    h = _switched(g, c)
    _check_conditions(g, h, c)
    if check and charpoly(h) != charpoly(g):
        raise ConstructionError("switching conditions held but spectra differ")
    return h


def find_switch_configs(g: Graph, include_empty: bool = False) -> list[SwitchConfig]:
    """All switching configurations of a diameter-2 graph whose result verifies.

    Configurations are listed once per unordered {g1, g2}, {h1, h2}.
    """
    if g.n > 1 and (not is_connected(g) or diameter(g) > 2):
        raise DiameterExceeded("switching needs a connected graph of diameter at most 2")
    dist = all_pairs_distances(g)
    seen = set()
    out = []
    for quad in itertools.permutations(range(g.n), 4):
        g1, g2, h1, h2 = quad
        variant = _variant(g, g1, g2, h1, h2)
        if variant is None:
            continue
        c = _config(g, dist, g1, g2, h1, h2, variant)
        if c is None or (not c.S and not include_empty):
            continue
        key = (frozenset((g1, g2)), frozenset((h1, h2)), c.S)
        if key in seen:
            continue
        if c.S:
            try:
                _check_conditions(g, _switched(g, c), c)
            except ConditionViolated:
                continue
        seen.add(key)
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# unicyclic family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnicyclicPair:
    k: int
    g1: Graph
    g2: Graph


def _hang_path(edges: list, n: int, at: int, count: int) -> int:
    prev = at
    for _ in range(count):
        edges.append((prev, n))
        prev = n
        n += 1
    return n


def unicyclic_pair(k: int, check: bool = True) -> UnicyclicPair:
    """Two unicyclic graphs on 3k + 11 vertices, cospectral for every k.

    Both share the 4-cycle a1 - a2 - a4 - a3 - a1 (vertices 0, 1, 3, 2)::

        G1:  a5 - a1,   a4 - [k+1],  a2 - [k+3],  a2 - [k+2]
        G2:  a6 - a5 - a1,  a1 - [k+2],  a2 - [k+2],  a4 - [k+1]

    ``[m]`` is a pendant path of m new vertices, numbered in the order listed.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    cyc = [(0, 1), (1, 3), (3, 2), (2, 0)]

    e1 = cyc + [(0, 4)]
    n1 = 5
    n1 = _hang_path(e1, n1, 3, k + 1)
    n1 = _hang_path(e1, n1, 1, k + 3)
    n1 = _hang_path(e1, n1, 1, k + 2)

    e2 = cyc + [(0, 4), (4, 5)]
    n2 = 6
    n2 = _hang_path(e2, n2, 0, k + 2)
    n2 = _hang_path(e2, n2, 1, k + 2)
    n2 = _hang_path(e2, n2, 3, k + 1)

    pair = UnicyclicPair(k, Graph.from_edges(n1, e1), Graph.from_edges(n2, e2))
    if check and charpoly(pair.g1) != charpoly(pair.g2):
        raise ConstructionError(f"unicyclic pair for k={k} is not cospectral")
    return pair
