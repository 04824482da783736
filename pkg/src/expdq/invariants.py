"""Graph invariants recovered from the D_q characteristic polynomial alone.

Most readings use ``p(x + 1) = det(xI - M)`` where ``M = D_q - I`` has a zero
diagonal and off-diagonal entries ``q**dist``.  The coefficient of ``x^(n-j)``
there is a signed sum of j x j principal minors of M, and the power of q in
each term records the distances it used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field

from .errors import DiameterExceeded, NonIntegerRoot, NotDivisible, OddPowerPresent
from .expdist import CharPoly, charpoly_at_q
from .graph import ComponentProfile, Graph, diameter, is_connected
from .polyring import Q, X, BiPoly, UPoly, poly_eval, split_integer_roots


def _n(p: CharPoly) -> int:
    return max(p.deg_x, 0)


def components_from_charpoly(p: CharPoly) -> ComponentProfile:
    """At q = 1, D_q is block diagonal with all-ones blocks, one per component."""
    n = _n(p)
    u = poly_eval(p, 1)
    zeros = 0
    while zeros < len(u.coeffs) and u.coeffs[zeros] == 0:
        zeros += 1
    rest = UPoly(u.coeffs[zeros:])
    roots, residual = split_integer_roots(rest, range(n, 0, -1))
    if residual.degree > 0:
        raise NonIntegerRoot(f"q=1 evaluation has a non-integer root: {residual}")
    sizes = sorted((t for t, m in roots.items() for _ in range(m)), reverse=True)
    if sum(sizes) != n:
        raise NonIntegerRoot("component sizes do not add up to n")
    return ComponentProfile(tuple(sizes))


@dataclass(frozen=True)
class DistanceProfile:
    b: dict[int, int] = field(default_factory=dict)  # k -> pairs at distance k

    def __hash__(self):
        return hash(tuple(sorted(self.b.items())))

    @property
    def edges(self) -> int:
        return self.b.get(1, 0)

    @property
    def diameter(self) -> int:
        return max((k for k, v in self.b.items() if v), default=0)


def _shifted(p: CharPoly) -> BiPoly:
    return p.shift_x(1)


def distance_profile_from_charpoly(p: CharPoly, shifted: BiPoly | None = None) -> DistanceProfile:
    n = _n(p)
    s = _shifted(p) if shifted is None else shifted
    b = {}
    for dq, c in s.q_coeffs(n - 2).items():
        if dq % 2:
            raise OddPowerPresent(f"odd power q^{dq} in the x^{n - 2} coefficient")
        b[dq // 2] = -c
    return DistanceProfile({k: b[k] for k in sorted(b)})


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    components: ComponentProfile
    profile: DistanceProfile
    edges: int
    diameter: int
    p3_count: int
    is_forest: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": list(self.components.sizes),
            "distance_profile": {str(k): v for k, v in self.profile.b.items()},
            "edges": self.edges,
            "diameter": self.diameter,
            "p3_count": self.p3_count,
            "is_forest": self.is_forest,
        }


def summary(p: CharPoly) -> SpectralSummary:
    n = _n(p)
    s = _shifted(p)
    comps = components_from_charpoly(p)
    profile = distance_profile_from_charpoly(p, s)
    # a 3-subset spanning distances (1, 1, 2) is an induced P_3 and adds -2 q^4
    p3 = -s.coeff(4, n - 3) // 2 if n >= 3 else 0
    edges = profile.edges
    return SpectralSummary(
        n=n,
        components=comps,
        profile=profile,
        edges=edges,
        diameter=profile.diameter,
        p3_count=p3,
        is_forest=edges == n - comps.count,
    )


def adjacency_charpoly_from_dq(p: CharPoly) -> UPoly:
    """``det(xI - A)``: its x^(n-k) coefficient is that of q^k x^(n-k) in p(x+1).

    A term of a k x k minor has q-degree k exactly when every step is an edge.
    """
    n = _n(p)
    s = _shifted(p)
    return UPoly([s.coeff(n - j, j) for j in range(n + 1)])


def complement_adjacency_charpoly(p: CharPoly, n: int | None = None) -> UPoly:
    """``det(xI - A(complement))`` for a connected graph of diameter at most 2.

    Then ``M = qA + q^2 A'`` and the q^(2k) part of a k x k minor uses only
    complement edges.
    """
    if n is None:
        n = _n(p)
    elif n != _n(p):
        raise ValueError(f"n={n} does not match the polynomial degree {_n(p)}")
    s = _shifted(p)
    profile = distance_profile_from_charpoly(p, s)
    if any(v for k, v in profile.b.items() if k >= 3):
        raise DiameterExceeded("the graph has pairs at distance 3 or more")
    if n > 1 and components_from_charpoly(p).count != 1:
        raise DiameterExceeded("a disconnected graph has infinite diameter")
    return UPoly([s.coeff(2 * (n - j), j) for j in range(n + 1)])


def distance_charpoly_from_dq(src: Graph | CharPoly) -> UPoly:
    """``det(xI - D) = 2^-n det((2x+1)I - D_2)`` for connected diameter <= 2.

    Accepts a graph or its symbolic D_q polynomial.
    """
    if isinstance(src, Graph):
        n = src.n
        if not is_connected(src) or diameter(src) > 2:
            raise DiameterExceeded("needs a connected graph of diameter at most 2")
        at2 = charpoly_at_q(src, 2)
    else:
        n = _n(src)
        if n > 1 and components_from_charpoly(src).count != 1:
            raise DiameterExceeded("needs a connected graph")
        if distance_profile_from_charpoly(src).diameter > 2:
            raise DiameterExceeded("needs diameter at most 2")
        at2 = poly_eval(src, 2)
    scaled = at2.compose(UPoly([1, 2]))
    return UPoly([Fraction(c, 2**n) for c in scaled.coeffs]) if n else scaled


def _strip_factor(p: BiPoly, factor: BiPoly, limit: int) -> tuple[int, BiPoly]:
    m = 0
    while m < limit:
        try:
            p = p.exact_div(factor)
        except NotDivisible:
            break
        m += 1
    return m, p


def complete_components(p: CharPoly) -> list[int]:
    """Sizes t (with repetition, descending) of the K_t components.

    K_t is a component exactly when ``(t - 1)q + 1`` is an eigenvalue.
    """
    sizes = components_from_charpoly(p).sizes
    out = []
    for t in sorted(set(sizes), reverse=True):
        factor = X - (Q * (t - 1) + 1)
        m, _ = _strip_factor(p, factor, sizes.count(t))
        out += [t] * m
    return out


def _peel_paths(sizes: list[int], b: dict[int, int]) -> bool:
    b = dict(b)
    for t in sorted(sizes, reverse=True):
        diam = max((k for k, v in b.items() if v), default=0)
        if diam != t - 1:
            return False
        for k in range(1, t):
            b[k] = b.get(k, 0) - (t - k)
            if b[k] < 0:
                return False
    return not any(b.values())


def is_union_of_paths(p: CharPoly) -> bool:
    """Peel the largest component: it is a path iff the residual diameter is t-1.

    A path on t vertices has exactly t - k pairs at distance k.
    """
    sizes = list(components_from_charpoly(p).sizes)
    return _peel_paths(sizes, distance_profile_from_charpoly(p).b)


def is_union_of_paths_and_cliques(p: CharPoly) -> bool:
    sizes = list(components_from_charpoly(p).sizes)
    b = dict(distance_profile_from_charpoly(p).b)
    for t in complete_components(p):
        sizes.remove(t)
        b[1] = b.get(1, 0) - math.comb(t, 2)
    return _peel_paths(sizes, b)
