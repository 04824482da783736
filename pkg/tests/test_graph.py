import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from expdq.errors import InvalidParameter, MalformedGraph6
from expdq.graph import (
    Graph,
    all_pairs_distances,
    attach,
    cartesian_product,
    complement,
    complete,
    components,
    construct,
    cycle,
    diameter,
    disjoint_union,
    emit_graph6,
    empty,
    find_twins,
    graph_op,
    join,
    kneser,
    parse_graph6,
    path,
    read_graph6_lines,
    star,
    union_all,
    vertex_identification,
)

from oracles import floyd_warshall, random_graph, to_nx


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def same_labelled(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.rows == h.rows


# -- graph6 -------------------------------------------------------------------


def test_graph6_examples():
    assert same_labelled(parse_graph6("C~"), complete(4))
    assert same_labelled(parse_graph6("Bw"), complete(3))
    assert emit_graph6(complete(4)) == "C~"


@pytest.mark.parametrize("bad", ["", "C", "Bx", "B\x7f", "~~~"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_graph6_roundtrip_and_networkx(g):
    text = emit_graph6(g)
    assert same_labelled(parse_graph6(text), g)
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert text == ref
    back = nx.from_graph6_bytes(text.encode())
    assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


def test_graph6_header_and_line_numbers():
    rows = list(read_graph6_lines([">>graph6<<Bw", "", "C~"]))
    assert [t for _, t, _ in rows] == ["Bw", "C~"]
    with pytest.raises(MalformedGraph6, match="line 2"):
        list(read_graph6_lines(["Bw", "C"]))


# -- distances ------------------------------------------------------------------


def test_distance_examples():
    assert all_pairs_distances(path(3))[0][2] == 2
    d = all_pairs_distances(disjoint_union(complete(3), complete(1)))
    assert all(d[3][v] is None for v in range(3))
    pet = kneser(5, 2)
    dp = all_pairs_distances(pet)
    assert {dp[i][j] for i in range(10) for j in range(10) if i != j} == {1, 2}
    assert diameter(pet) == 2


def test_components_examples():
    g = union_all([complete(3)] + [complete(1)] * 4)
    assert components(g).sizes == (3, 1, 1, 1, 1)
    assert components(g).count == 5
    assert diameter(cycle(7)) == 3
    assert components(empty(5)).sizes == (1,) * 5


def test_disconnected_diameter_is_largest_finite():
    assert diameter(disjoint_union(path(4), complete(2))) == 3


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_distances_match_floyd_warshall(g):
    assert all_pairs_distances(g) == floyd_warshall(g)
    ref = sorted((len(c) for c in nx.connected_components(to_nx(g))), reverse=True)
    assert list(components(g).sizes) == ref


# -- families -------------------------------------------------------------------


def test_family_examples():
    pet = construct("kneser", 5, 2)
    assert (pet.n, pet.edge_count, set(pet.degrees())) == (10, 15, {3})
    assert nx.is_isomorphic(to_nx(pet), nx.petersen_graph())
    q3 = construct("hypercube", 3)
    assert (q3.n, q3.edge_count) == (8, 12)
    w5 = construct("wheel", 5)
    assert w5.n == 6 and nx.is_isomorphic(to_nx(w5), to_nx(join(cycle(5), complete(1))))


@pytest.mark.parametrize("args", [("kneser", 4, 2), ("kneser", 3, 2), ("nope", 3), ("path",)])
def test_construct_invalid(args):
    with pytest.raises(InvalidParameter):
        construct(*args)


# -- operations -----------------------------------------------------------------


def test_operation_examples():
    rook = graph_op("cartesian_product", complete(3), complete(3))
    assert rook.n == 9 and set(rook.degrees()) == {4}
    assert nx.is_isomorphic(to_nx(rook), nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3)))
    assert nx.is_isomorphic(to_nx(graph_op("join", cycle(5), complete(1))), to_nx(construct("wheel", 5)))
    assert complement(complete(5)).edge_count == 0


def test_vertex_identification_examples():
    s = vertex_identification(star(2), 0, star(2), 0)
    assert nx.is_isomorphic(to_nx(s), to_nx(star(4)))
    p = vertex_identification(path(2), 1, path(2), 0)
    assert same_labelled(p, path(3))


def test_attach_examples():
    tail = attach(complete(3), 0, "pendant_path", 2)
    assert tail.n == 5 and sorted(tail.degrees()) == [1, 2, 2, 2, 3]
    assert nx.is_isomorphic(to_nx(attach(complete(1), 0, "pendant_leaves", 3)), to_nx(star(3)))
    assert same_labelled(attach(complete(1), 0, "pendant_clique", 3), complete(4))


def test_twins_examples():
    assert find_twins(complete(4)) == [(u, v, True) for u, v in itertools.combinations(range(4), 2)]
    assert find_twins(star(3)) == [(1, 2, False), (1, 3, False), (2, 3, False)]
    assert find_twins(path(4)) == []


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4))
def test_cartesian_distance_law(g, h):
    prod = cartesian_product(g, h)
    dg, dh, dp = all_pairs_distances(g), all_pairs_distances(h), all_pairs_distances(prod)
    m = h.n
    for (a, b), (c, d) in itertools.product(itertools.product(range(g.n), range(m)), repeat=2):
        if dg[a][c] is None or dh[b][d] is None:
            assert dp[a * m + b][c * m + d] is None
        else:
            assert dp[a * m + b][c * m + d] == dg[a][c] + dh[b][d]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_join_diameter_at_most_two(g, h):
    if g.n and h.n:
        assert diameter(join(g, h)) <= 2


def test_complement_involution():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 9))
        assert same_labelled(complement(complement(g)), g)
        assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
