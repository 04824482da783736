"""The exponential distance matrix, its characteristic polynomial and spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, all_pairs_distances, diameter
from .polyring import (
    ONE,
    X,
    ZERO,
    BiPoly,
    UPoly,
    bareiss_det,
    normalize_scalar,
    poly_eval,
)

# A D_q characteristic polynomial is a BiPoly monic of degree n in x.
CharPoly = BiPoly


def build_dq(g: Graph) -> list[list[BiPoly]]:
    """Entry (u, v) is ``q**dist(u, v)``, or 0 when u and v are disconnected."""
    dist = all_pairs_distances(g)
    powers: dict[int, BiPoly] = {}
    out = []
    for row in dist:
        out_row = []
        for d in row:
            if d is None:
                out_row.append(ZERO)
            else:
                if d not in powers:
                    powers[d] = BiPoly.monomial(1, d, 0)
                out_row.append(powers[d])
        out.append(out_row)
    return out


def dq_values(g: Graph, q_val) -> list[list]:
    """D_q with q replaced by an exact scalar."""
    q_val = normalize_scalar(q_val)
    dist = all_pairs_distances(g)
    cache = {}
    out = []
    for row in dist:
        r = []
        for d in row:
            if d is None:
                r.append(0)
            else:
                if d not in cache:
                    cache[d] = normalize_scalar(q_val**d) if d else 1
                r.append(cache[d])
        out.append(r)
    return out


def dq_float(g: Graph, q_val: float) -> np.ndarray:
    dist = all_pairs_distances(g)
    q = float(q_val)
    return np.array([[0.0 if d is None else q**d for d in row] for row in dist])


@lru_cache(maxsize=4096)
def charpoly(g: Graph) -> CharPoly:
    """``det(xI - D_q)`` in Z[q, x] by Bareiss elimination.

    Results are memoised; graphs and polynomials are both immutable.
    """
    if g.n == 0:
        return ONE
    dq = build_dq(g)
    xm1 = X - 1
    m = [
        [xm1 if i == j else -dq[i][j] for j in range(g.n)]
        for i in range(g.n)
    ]
    return bareiss_det(m)


def matrix_charpoly(matrix: Sequence[Sequence]) -> UPoly:
    """``det(xI - M)`` for a matrix of exact scalars, as a ``UPoly``."""
    n = len(matrix)
    if n == 0:
        return UPoly([1])
    m = [
        [UPoly([-matrix[i][j], 1]) if i == j else UPoly([-matrix[i][j]]) for j in range(n)]
        for i in range(n)
    ]
    return bareiss_det(m)


def charpoly_at_q(g: Graph, q_val) -> UPoly:
    """Characteristic polynomial of D_q at a fixed exact q, built directly."""
    return matrix_charpoly(dq_values(g, q_val))


def adjacency_charpoly(g: Graph) -> UPoly:
    return matrix_charpoly(g.adjacency_matrix())


def distance_charpoly(g: Graph) -> UPoly:
    """``det(xI - D)`` of the ordinary distance matrix (connected graphs only)."""
    dist = all_pairs_distances(g)
    if any(d is None for row in dist for d in row):
        raise ValueError("the distance matrix needs a connected graph")
    return matrix_charpoly(dist)


# ---------------------------------------------------------------------------
# numeric spectra
# ---------------------------------------------------------------------------


def jacobi_eigenvalues(a, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm is below ``tol`` times
    ``max(1, ||A||_F)``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.allclose(a, a.T):
        raise ValueError("Jacobi needs a symmetric matrix")
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = np.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) < 1e-300:
                    continue
                theta = (a[r, r] - a[p, p]) / (2.0 * apr)
                if abs(theta) > 1e150:  # theta^2 would overflow
                    t = 0.5 / theta
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_r = a[:, r].copy()
                a[:, p] = c * col_p - s * col_r
                a[:, r] = s * col_p + c * col_r
                row_p = a[p, :].copy()
                row_r = a[r, :].copy()
                a[p, :] = c * row_p - s * row_r
                a[r, :] = s * row_p + c * row_r
                a[p, r] = a[r, p] = 0.0
    return np.sort(np.diag(a))


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: tuple[float, ...]  # ascending
    q_value: Fraction

    @property
    def spectral_radius(self) -> float:
        return max((abs(v) for v in self.eigenvalues), default=0.0)

    def clusters(self, tol: float = 1e-7) -> list[tuple[float, int]]:
        """Group eigenvalues closer than ``tol`` into ``(mean, multiplicity)``."""
        out: list[list[float]] = []
        for v in self.eigenvalues:
            if out and v - out[-1][-1] <= tol:
                out[-1].append(v)
            else:
                out.append([v])
        return [(sum(c) / len(c), len(c)) for c in out]


def numeric_spectrum(g: Graph, q_val) -> NumericSpectrum:
    q = Fraction(q_val) if not isinstance(q_val, float) else Fraction(q_val).limit_denominator()
    eig = jacobi_eigenvalues(dq_float(g, float(q)))
    return NumericSpectrum(tuple(float(v) for v in eig), q)


def spectral_radius(g: Graph, q_val) -> float:
    return numeric_spectrum(g, q_val).spectral_radius


# ---------------------------------------------------------------------------
# cospectrality
# ---------------------------------------------------------------------------


def are_dq_cospectral(g: Graph, h: Graph) -> bool:
    """Same characteristic polynomial in Z[q, x], i.e. cospectral for every q."""
    if g.n != h.n:
        return False
    if g == h:
        return True
    # two cheap integer evaluations reject most non-cospectral pairs
    for qv in (2, 3):
        if charpoly_at_q(g, qv) != charpoly_at_q(h, qv):
            return False
    return charpoly(g) == charpoly(h)


def are_cospectral_at(g: Graph, qg, h: Graph, qh) -> bool:
    return g.n == h.n and charpoly_at_q(g, qg) == charpoly_at_q(h, qh)


def evaluation_points_needed(g: Graph, h: Graph) -> int:
    """Number of distinct q values that pins down both char polys.

    Every coefficient of x^k is a polynomial in q of degree at most
    ``n * diameter``.
    """
    n = max(g.n, h.n)
    return n * max(diameter(g), diameter(h), 1) + 1


def cospectral_by_evaluation(g: Graph, h: Graph) -> bool:
    """Symbolic cospectrality decided from exact evaluations at q = 1, 2, ..."""
    if g.n != h.n:
        return False
    for qv in range(1, evaluation_points_needed(g, h) + 1):
        if charpoly_at_q(g, qv) != charpoly_at_q(h, qv):
            return False
    return True


def first_difference(p: BiPoly, r: BiPoly):
    """Highest ``(deg_q, deg_x, coeff_p, coeff_r)`` where the polynomials differ."""
    keys = set(dict(p.items())) | set(dict(r.items()))
    diff = [k for k in keys if p.coeff(*k) != r.coeff(*k)]
    if not diff:
        return None
    dq, dx = max(diff, key=lambda k: (k[1], k[0]))
    return dq, dx, p.coeff(dq, dx), r.coeff(dq, dx)


def eval_charpoly(p: CharPoly, q_val) -> UPoly:
    return poly_eval(p, q_val)
