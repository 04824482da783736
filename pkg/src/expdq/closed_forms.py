"""Closed-form D_q spectra for standard families and for graph operations.

Eigenvalues that are polynomials in q are stored as ``(BiPoly, multiplicity)``
pairs.  Eigenvalues that are not (the two join eigenvalues, or affine images of
irrational adjacency eigenvalues) are carried as extra polynomial factors in
q and x, so the characteristic polynomial can still be rebuilt exactly.
Cycles have trigonometric eigenvalues and only get a numeric interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DiameterExceeded, InvalidParameter, NotRegular
from .expdist import NumericSpectrum, adjacency_charpoly
from .graph import Graph, diameter, is_connected
from .polyring import ONE, Q, X, BiPoly, UPoly, poly_eval, split_integer_roots

# D_q of a diameter <= 2 graph is I + qA + q^2(J - I - A), so each non-Perron
# adjacency eigenvalue mu becomes A_COEF * mu + B_COEF.
A_COEF = Q - Q * Q
B_COEF = ONE - Q * Q


@dataclass(frozen=True)
class ClosedSpectrum:
    pairs: tuple[tuple[BiPoly, int], ...]
    factors: tuple[tuple[BiPoly, int], ...] = ()

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs) + sum(f.deg_x * m for f, m in self.factors)

    def charpoly(self) -> BiPoly:
        out = ONE
        for lam, m in self.pairs:
            out = out * (X - lam) ** m
        for f, m in self.factors:
            out = out * f**m
        return out

    def eigenvalues_at(self, q_val) -> list[float]:
        """Numeric eigenvalues at a real q, ascending."""
        q = Fraction(q_val)
        vals: list[float] = []
        for lam, m in self.pairs:
            vals.extend([float(poly_eval(lam, q, 0))] * m)
        for f, m in self.factors:
            u = poly_eval(f, q)
            roots = np.roots([float(c) for c in reversed(u.coeffs)])
            vals.extend(float(r.real) for r in roots for _ in range(m))
        return sorted(vals)

    def lines(self) -> list[str]:
        out = [f"{lam}  x{m}" for lam, m in self.pairs]
        out += [f"roots of {f}  x{m}" for f, m in self.factors]
        return out


def _merge(pairs: Iterable[tuple[BiPoly, int]]) -> tuple[tuple[BiPoly, int], ...]:
    acc: dict[BiPoly, int] = {}
    for lam, m in pairs:
        acc[lam] = acc.get(lam, 0) + m
    return tuple(acc.items())


def spectrum_complete(n: int) -> ClosedSpectrum:
    if n < 1:
        raise InvalidParameter("complete graph needs n >= 1")
    pairs = [(BiPoly.monomial(n - 1, 1) + 1, 1)]
    if n > 1:
        pairs.append((ONE - Q, n - 1))
    return ClosedSpectrum(tuple(pairs))


def spectrum_hypercube(d: int) -> ClosedSpectrum:
    if d < 1:
        raise InvalidParameter("hypercube needs dimension >= 1")
    return ClosedSpectrum(
        tuple(((ONE - Q) ** k * (ONE + Q) ** (d - k), math.comb(d, k)) for k in range(d + 1))
    )


def spectrum_cycle(n: int, q_val) -> NumericSpectrum:
    """Circulant formula for C_n at a real q."""
    if n < 3:
        raise InvalidParameter("cycle needs n >= 3")
    q = float(q_val)
    vals = []
    for j in range(n):
        if n % 2:
            s = 1 + 2 * sum(q**k * math.cos(2 * math.pi * k * j / n) for k in range(1, (n - 1) // 2 + 1))
        else:
            h = n // 2
            s = 1 + (-1) ** j * q**h + 2 * sum(
                q**k * math.cos(2 * math.pi * k * j / n) for k in range(1, h)
            )
        vals.append(s)
    return NumericSpectrum(tuple(sorted(vals)), Fraction(q_val))


# ---------------------------------------------------------------------------
# affine images of adjacency eigenvalues
# ---------------------------------------------------------------------------


def _affine_image(residual: UPoly) -> BiPoly:
    """Given monic integer R(y), return the monic polynomial whose roots are
    ``A_COEF * mu + B_COEF`` for the roots mu of R, i.e. a^d R((x - b) / a)."""
    d = residual.degree
    shifted = X - B_COEF
    out = BiPoly()
    for j, c in enumerate(residual.coeffs):
        if c:
            out = out + int(c) * shifted**j * A_COEF ** (d - j)
    return out


def _is_exact_int(v) -> bool:
    if isinstance(v, int):
        return True
    return isinstance(v, Fraction) and v.denominator == 1


def _affine_spectrum(values: Sequence) -> tuple[list, list]:
    """Split adjacency eigenvalues into pairs (integers) and one factor (rest).

    Non-integer eigenvalues of an integer matrix come in complete sets of
    algebraic conjugates, so their monic product has integer coefficients;
    floats are rounded to that polynomial.
    """
    pairs = []
    rest = []
    for v in values:
        if _is_exact_int(v) or (isinstance(v, float) and abs(v - round(v)) < 1e-9):
            mu = int(round(v))
            pairs.append((A_COEF * mu + B_COEF, 1))
        else:
            rest.append(float(v))
    factors = []
    if rest:
        coeffs = np.poly(rest)
        ints = [int(round(c)) for c in coeffs]
        if max(abs(c - i) for c, i in zip(coeffs, ints)) > 1e-6:
            raise ValueError("non-integer adjacency eigenvalues do not form an integer polynomial")
        factors.append((_affine_image(UPoly(list(reversed(ints)))), 1))
    return pairs, factors


def exact_adjacency_split(g: Graph) -> tuple[dict[int, int], UPoly]:
    """Integer adjacency eigenvalues with multiplicity, plus the integer residual."""
    bound = max(g.degrees(), default=0)
    return split_integer_roots(adjacency_charpoly(g), range(-bound, bound + 1))


def _regularity(g: Graph) -> int:
    degs = set(g.degrees())
    if len(degs) > 1:
        raise NotRegular("graph is not regular")
    return degs.pop() if degs else 0


def spectrum_regular_diam2(g: Graph, adjacency_spectrum: Sequence | None = None) -> ClosedSpectrum:
    """D_q spectrum of a connected k-regular graph of diameter at most 2.

    ``adjacency_spectrum`` lists all n adjacency eigenvalues (ints, Fractions
    or floats).  When omitted it is derived exactly from the graph.
    """
    k = _regularity(g)
    if not is_connected(g) or diameter(g) > 2:
        raise DiameterExceeded("needs a connected graph of diameter at most 2")
    n = g.n
    perron = BiPoly.monomial(n, 2) - (Q * Q - Q) * k - (Q * Q - 1)
    if adjacency_spectrum is None:
        roots, residual = exact_adjacency_split(g)
        roots[k] -= 1
        pairs = [(A_COEF * mu + B_COEF, m) for mu, m in roots.items() if m]
        factors = [(_affine_image(residual), 1)] if residual.degree > 0 else []
    else:
        values = list(adjacency_spectrum)
        if len(values) != n:
            raise ValueError("adjacency spectrum must list n eigenvalues")
        idx = min(range(n), key=lambda i: abs(float(values[i]) - k))
        if abs(float(values[idx]) - k) > 1e-9:
            raise ValueError("adjacency spectrum lacks the Perron value k")
        del values[idx]
        pairs, factors = _affine_spectrum(values)
    return ClosedSpectrum(_merge([(perron, 1)] + pairs), tuple(factors))


@dataclass(frozen=True)
class JoinQuotient:
    n: int
    k: int
    m: int
    l: int

    def matrix(self) -> list[list[BiPoly]]:
        q2 = Q * Q
        return [
            [ONE + Q * self.k + q2 * (self.n - self.k - 1), Q * self.m],
            [Q * self.n, ONE + Q * self.l + q2 * (self.m - self.l - 1)],
        ]

    def quadratic(self) -> BiPoly:
        """``x^2 - tr x + det``; its roots are the two join eigenvalues."""
        (a, b), (c, d) = self.matrix()
        return X * X - X * (a + d) + (a * d - b * c)


def spectrum_join(
    nG: int, kG: int, specG: Sequence, nH: int, kH: int, specH: Sequence
) -> ClosedSpectrum:
    """D_q spectrum of G v H for regular G, H from their non-Perron adjacency eigenvalues."""
    if len(specG) != nG - 1 or len(specH) != nH - 1:
        raise ValueError("pass the n - 1 non-Perron adjacency eigenvalues of each side")
    quad = JoinQuotient(nG, kG, nH, kH).quadratic()
    pairs, factors = _affine_spectrum(list(specG) + list(specH))
    return ClosedSpectrum(_merge(pairs), tuple([(quad, 1)] + factors))


def spectrum_join_graphs(g: Graph, h: Graph) -> ClosedSpectrum:
    """``spectrum_join`` with exact adjacency data read off the two graphs."""
    kg, kh = _regularity(g), _regularity(h)
    pairs = []
    factors = [(JoinQuotient(g.n, kg, h.n, kh).quadratic(), 1)]
    for side, k in ((g, kg), (h, kh)):
        roots, residual = exact_adjacency_split(side)
        roots[k] -= 1
        pairs += [(A_COEF * mu + B_COEF, m) for mu, m in roots.items() if m]
        if residual.degree > 0:
            factors.append((_affine_image(residual), 1))
    return ClosedSpectrum(_merge(pairs), tuple(factors))


def spectrum_wheel(n: int) -> ClosedSpectrum:
    """W_n = C_n v K_1."""
    from .graph import complete, cycle

    return spectrum_join_graphs(cycle(n), complete(1))


@dataclass(frozen=True)
class KneserEigenData:
    n: int
    r: int
    eigenvalues: tuple[BiPoly, ...]
    multiplicities: tuple[int, ...]

    def closed_spectrum(self) -> ClosedSpectrum:
        return ClosedSpectrum(_merge(zip(self.eigenvalues, self.multiplicities)))


def _kneser_p(n: int, r: int, i: int, j: int) -> int:
    return sum(
        (-1) ** t * math.comb(j, t) * math.comb(r - j, i - t) * math.comb(n - r - j, i - t)
        for t in range(0, i + 1)
    )


def _kneser_f(n: int, r: int, i: int) -> int:
    s = n - 2 * r
    return min(2 * (-(-i // s)), 2 * (-(-(r - i) // s)) + 1)


def spectrum_kneser(n: int, r: int) -> KneserEigenData:
    if r < 1 or n <= 2 * r:
        raise InvalidParameter(f"Kneser parameters need r >= 1 and n >= 2r+1, got ({n}, {r})")
    eigs = []
    mults = []
    for j in range(r + 1):
        lam = BiPoly()
        for i in range(r + 1):
            lam = lam + BiPoly.monomial(_kneser_p(n, r, i, j), _kneser_f(n, r, i))
        eigs.append(lam)
        m = Fraction(n - 2 * j + 1, n - j + 1) * math.comb(n, j)
        mults.append(int(m))
    return KneserEigenData(n, r, tuple(eigs), tuple(mults))


def spectrum_cartesian(a: ClosedSpectrum, b: ClosedSpectrum) -> ClosedSpectrum:
    if a.factors or b.factors:
        raise ValueError("Cartesian products need spectra made of polynomial eigenvalues")
    return ClosedSpectrum(_merge((la * lb, ma * mb) for la, ma in a.pairs for lb, mb in b.pairs))


def family_spectrum(family: str, *params: int) -> ClosedSpectrum:
    """Closed form for a named family (cycles excluded: they are numeric only)."""
    if family == "complete":
        return spectrum_complete(*params)
    if family == "hypercube":
        return spectrum_hypercube(*params)
    if family == "kneser":
        return spectrum_kneser(*params).closed_spectrum()
    if family == "wheel":
        return spectrum_wheel(*params)
    if family == "empty":
        (n,) = params
        return ClosedSpectrum(((ONE, n),) if n else ())
    raise InvalidParameter(f"no closed form for family {family!r}")
