"""Acceptance criteria 1 to 9.

Each criterion prints one ``ACCEPTANCE <k>: PASS|FAIL <detail>`` line.  Under
pytest the lines are also repeated in the terminal summary; run this file
directly (``python tests/test_acceptance.py``) to get just the report.
"""

from __future__ import annotations

import math
import os
import random
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.dirname(__file__))

import networkx as nx  # noqa: E402
import numpy as np  # noqa: E402
import pytest  # noqa: E402

from expdq import gallery  # noqa: E402
from expdq.census import census  # noqa: E402
from expdq.closed_forms import (  # noqa: E402
    spectrum_complete,
    spectrum_join,
    spectrum_join_graphs,
    spectrum_kneser,
    spectrum_regular_diam2,
    spectrum_wheel,
)
from expdq.constructions import (  # noqa: E402
    apply_switch,
    find_switch_configs,
    path_charpoly,
    unicyclic_pair,
    verify_pendant_leaves,
    verify_pendant_path,
)
from expdq.expdist import (  # noqa: E402
    are_cospectral_at,
    charpoly,
    charpoly_at_q,
    numeric_spectrum,
    spectral_radius,
)
from expdq.graph import (  # noqa: E402
    attach,
    cartesian_product,
    complement,
    complete,
    cycle,
    disjoint_union,
    find_twins,
    hypercube,
    join,
    kneser,
    parse_graph6,
    path,
    star,
    union_all,
    wheel,
)
from expdq.invariants import (  # noqa: E402
    adjacency_charpoly_from_dq,
    complement_adjacency_charpoly,
    complete_components,
    distance_charpoly_from_dq,
    summary,
)
from expdq.polyring import ONE, Q, X, ZERO, UPoly, parse_scalar, poly_substitute_x  # noqa: E402

from oracles import (  # noqa: E402
    floyd_warshall,
    interpolated_charpoly,
    random_connected,
    random_graph,
    to_nx,
)
from test_constructions import HOSTS, glue_trees, pendant_path_instances  # noqa: E402
from test_invariants import (  # noqa: E402
    diameter_two_atlas,
    direct_profile,
    induced_p3_count,
    is_clique,
    np_charpoly,
    random_graphs_200,
    random_union,
)

DATA = os.path.join(os.path.dirname(__file__), "data", "connected7.g6")
RESULTS: dict[int, str] = {}


def isomorphic(g, h) -> bool:
    return nx.is_isomorphic(to_nx(g), to_nx(h))


class Check:
    """Collects named sub-checks; a criterion passes when all of them do."""

    def __init__(self):
        self.failed: list[str] = []
        self.count = 0

    def __call__(self, ok: bool, name: str) -> None:
        self.count += 1
        if not ok:
            self.failed.append(name)


# -- the criteria ------------------------------------------------------------------


def criterion_1(check: Check) -> str:
    for n in range(1, 9):
        want = (X - (1 + (n - 1) * Q)) * (X - (1 - Q)) ** (n - 1)
        check(charpoly(complete(n)) == want == spectrum_complete(n).charpoly(), f"K_{n}")
    for d in range(1, 5):
        want = ONE
        for k in range(d + 1):
            want = want * (X - (1 - Q) ** k * (1 + Q) ** (d - k)) ** math.comb(d, k)
        check(charpoly(hypercube(d)) == want, f"Q_{d}")
    data = spectrum_kneser(5, 2)
    pet = charpoly(kneser(5, 2))
    check(all(poly_substitute_x(pet, lam) == ZERO for lam in data.eigenvalues), "Petersen roots")
    check(sorted(data.multiplicities) == [1, 4, 5] and sum(data.multiplicities) == 10, "Kneser mults")
    return "K_1..K_8, Q_1..Q_4, KG(5,2) exact"


def criterion_2(check: Check) -> str:
    rng = random.Random(11)
    for i in range(20):
        g, h = random_graph(rng, rng.randint(1, 5)), random_graph(rng, rng.randint(1, 5))
        check(charpoly(disjoint_union(g, h)) == charpoly(g) * charpoly(h), f"union {i}")
    q = Fraction(1, 3)
    worst = 0.0
    for i in range(20):
        g, h = random_graph(rng, rng.randint(1, 4)), random_graph(rng, rng.randint(1, 4))
        a, b = numeric_spectrum(g, q).eigenvalues, numeric_spectrum(h, q).eigenvalues
        want = np.array(sorted(x * y for x in a for y in b))
        got = np.array(numeric_spectrum(cartesian_product(g, h), q).eigenvalues)
        err = float(np.max(np.abs(got - want)))
        worst = max(worst, err)
        check(err < 1e-8, f"cartesian {i}")
    check(spectrum_wheel(5).charpoly() == charpoly(wheel(5)), "W_5 join")
    c5_rest = [2 * math.cos(2 * math.pi * j / 5) for j in range(1, 5)]
    check(spectrum_join(5, 2, c5_rest, 1, 0, []).charpoly() == charpoly(wheel(5)), "W_5 floats")
    for a, b in [(1, 1), (1, 3), (2, 3), (3, 3), (4, 2)]:
        got = spectrum_join(a, a - 1, [-1] * (a - 1), b, b - 1, [-1] * (b - 1)).charpoly()
        check(got == charpoly(join(complete(a), complete(b))) == spectrum_complete(a + b).charpoly(), f"K_{a} v K_{b}")
        check(spectrum_join_graphs(complete(a), complete(b)).charpoly() == got, f"K_{a} v K_{b} exact")
    check(spectrum_regular_diam2(kneser(5, 2), [3] + [1] * 5 + [-2] * 4).charpoly() == charpoly(kneser(5, 2)), "Petersen")
    check(spectrum_regular_diam2(cycle(5)).charpoly() == charpoly(cycle(5)), "C_5")
    return f"union x20, cartesian x20 at q=1/3 (max err {worst:.1e}), joins, regular"


def criterion_3(check: Check) -> str:
    for i, (g, u, k) in enumerate(pendant_path_instances(50)):
        check(verify_pendant_path(g, u, k), f"pendant path {i}")
    for n in range(0, 11):
        check(path_charpoly(n) == charpoly(path(n)), f"P_{n}")
    for k in range(1, 6):
        check(verify_pendant_leaves(star(k), 0, k), f"star {k}")
    rng = random.Random(23)
    for i in range(20):
        host = random_connected(rng, rng.randint(1, 5), 0.5)
        u, k = rng.randrange(host.n), rng.randint(1, 4)
        clique = i % 4 == 3
        g = attach(host, u, "pendant_clique" if clique else "pendant_leaves", k)
        check(verify_pendant_leaves(g, u, k, clique_variant=clique), f"leaves host {i}")
    rng = random.Random(31)
    twins = 0
    while twins < 30:
        g = random_connected(rng, rng.randint(3, 8), rng.choice([0.3, 0.5, 0.7]))
        found = find_twins(g)
        if not found:
            continue
        twins += 1
        p = charpoly(g)
        for u, v, joined in found:
            root = 1 - Q if joined else 1 - Q * Q
            check(poly_substitute_x(p, root) == ZERO, f"twins {twins}")
    return "50 pendant paths, P_0..P_10, leaves on 5 stars + 20 hosts, 30 twin graphs"


def criterion_4(check: Check) -> str:
    for i, g in enumerate(random_graphs_200()):
        s = summary(charpoly(g))
        G = to_nx(g)
        b = direct_profile(g)
        comps = sorted((len(c) for c in nx.connected_components(G)), reverse=True)
        check(list(s.components.sizes) == comps, f"components {i}")
        check(s.profile.b == dict(sorted(b.items())), f"profile {i}")
        check(s.edges == g.edge_count and s.diameter == max(b, default=0), f"edges/diameter {i}")
        check(s.p3_count == induced_p3_count(g), f"p3 {i}")
        check(s.is_forest == nx.is_forest(G), f"forest {i}")
        check(adjacency_charpoly_from_dq(charpoly(g)) == np_charpoly(g.adjacency_matrix()), f"adjacency {i}")
    c4 = summary(charpoly(cycle(4)))
    check(c4.profile.b.get(2) == 2 and c4.p3_count == 4, "C_4 values")
    atlas = 0
    for g in diameter_two_atlas():
        atlas += 1
        p = charpoly(g)
        check(complement_adjacency_charpoly(p) == np_charpoly(complement(g).adjacency_matrix()), f"acomp {atlas}")
        check(distance_charpoly_from_dq(p) == np_charpoly(floyd_warshall(g)), f"distpoly {atlas}")
    rng = random.Random(99)
    for i in range(100):
        parts = random_union(rng)
        want = sorted((h.n for h in parts if is_clique(h)), reverse=True)
        check(complete_components(charpoly(union_all(parts))) == want, f"cliques {i}")
    return f"200 random graphs, {atlas} diameter-2 graphs, 100 unions"


def criterion_5(check: Check) -> str:
    lines = open(DATA).read().split()
    start = time.perf_counter()
    report = census(lines, ["dq", "a", "d"])
    elapsed = time.perf_counter() - start
    tab = report.crosstab()
    check(report.count == 853, "853 connected graphs")
    check(tab["dq_pairs"] == 11, "11 D_q pairs")
    check(tab["d_pairs"] == 11, "11 D pairs")
    check(tab["dq_and_d"] == 10, "10 shared")
    check(all(len(c) == 2 for c in report.classes["dq"]), "D_q classes are pairs")
    check(elapsed < 300, "runtime")
    dq, d = report.pairs("dq"), report.pairs("d")

    def listed(pair, pool) -> bool:
        a, b = pair
        for x, y in pool:
            gx, gy = parse_graph6(x), parse_graph6(y)
            if (isomorphic(a, gx) and isomorphic(b, gy)) or (isomorphic(a, gy) and isomorphic(b, gx)):
                return True
        return False

    check(listed(gallery.dq_not_d_pair(), dq - d), "D_q-not-D pair listed")
    check(listed(gallery.d_not_dq_pair(), d - dq), "D-not-D_q pair listed")
    sa, sb = gallery.saltire_pair()
    check(adjacency_charpoly_from_dq(charpoly(sa)) == adjacency_charpoly_from_dq(charpoly(sb)), "Saltire A")
    check(charpoly(sa) != charpoly(sb), "Saltire not D_q")
    return f"D_q {tab['dq_pairs']}, D {tab['d_pairs']}, shared {tab['dq_and_d']}, {elapsed:.1f}s"


def criterion_6(check: Check) -> str:
    t1, t2 = gallery.tree_mates()
    check(charpoly(t1) == charpoly(t2) and not isomorphic(t1, t2), "tree mates")
    for i, (a, b, certified) in enumerate(glue_trees()):
        check(certified and charpoly(a) == charpoly(b) and a != b, f"glue {i}")
    for k in range(5):
        pair = unicyclic_pair(k, check=False)
        check(charpoly(pair.g1) == charpoly(pair.g2), f"unicyclic k={k}")
        check(not isomorphic(pair.g1, pair.g2), f"unicyclic k={k} distinct")
    g = parse_graph6(HOSTS[1])
    switched = [apply_switch(g, c) for c in find_switch_configs(g)]
    check(any(charpoly(h) == charpoly(g) and not isomorphic(h, g) for h in switched), "switching")
    return "tree mates, 20 glued trees, unicyclic k=0..4, switching host"


def criterion_7(check: Check) -> str:
    for key, (a, b, qs) in gallery.specific_q_pairs().items():
        for text in qs:
            qv = parse_scalar(text)
            check(charpoly_at_q(a, qv) == charpoly_at_q(b, qv), f"pair {key} at {text}")
        check(charpoly(a) != charpoly(b), f"pair {key} symbolic")
    a, b = gallery.half_q_pair()
    check(are_cospectral_at(a, Fraction(1, 2), b, Fraction(1, 2)), "half-q pair at 1/2")
    check(charpoly(a) != charpoly(b), "half-q pair symbolic")
    rook, q1, other, q2 = gallery.cross_q_pair()
    want = UPoly.from_roots([4] + [1] * 4 + [Fraction(1, 4)] * 4)
    check(q1 == "1/2" and q2 == "3/4", "cross-q values")
    check(charpoly_at_q(rook, parse_scalar(q1)) == want, "K_3 x K_3 at 1/2")
    check(charpoly_at_q(other, parse_scalar(q2)) == want, "K_5 + 4K_1 at 3/4")
    return "q=3, q=-2, q=+-2i, q=1/2 and {4, 1 x4, 1/4 x4} exact"


def criterion_8(check: Check) -> str:
    a, b = gallery.spectral_radius_pair()
    ra_half, rb_half = spectral_radius(a, Fraction(1, 2)), spectral_radius(b, Fraction(1, 2))
    ra_qtr, rb_qtr = spectral_radius(a, Fraction(1, 4)), spectral_radius(b, Fraction(1, 4))
    check(abs(ra_half - 3.352) < 1e-3, "rho_1/2(a)")
    check(abs(rb_half - 3.3615) < 1e-3, "rho_1/2(b)")
    check(abs(ra_qtr - 2.0378) < 1e-3, "rho_1/4(a)")
    check(abs(rb_qtr - 2.0228) < 1e-3, "rho_1/4(b)")
    check(ra_half < rb_half and ra_qtr > rb_qtr, "ordering swap")
    return f"(a) {ra_half:.4f}/{ra_qtr:.4f} vs (b) {rb_half:.4f}/{rb_qtr:.4f}"


def criterion_9(check: Check) -> str:
    rng = random.Random(2718)
    for i in range(50):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7]))
        check(charpoly(g) == interpolated_charpoly(g), f"graph {i}")
    return "50 random graphs, Bareiss = interpolation"


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 10)}


def run(k: int) -> tuple[bool, str]:
    check = Check()
    start = time.perf_counter()
    try:
        detail = CRITERIA[k](check)
    except Exception as exc:  # report, then let the caller decide
        check.failed.append(f"{type(exc).__name__}: {exc}")
        detail = "raised"
    ok = not check.failed
    took = time.perf_counter() - start
    line = f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} ({check.count} checks, {took:.1f}s) {detail}"
    if not ok:
        line += " | failed: " + ", ".join(check.failed[:5])
    RESULTS[k] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("k", range(1, 10))
def test_acceptance(k):
    ok, line = run(k)
    assert ok, line


if __name__ == "__main__":
    outcomes = [run(k)[0] for k in range(1, 10)]
    sys.exit(0 if all(outcomes) else 1)
